"""veycalc: exact secondary characteristic classes of foliations.

Truncated Weil complexes W_q / WO_q / I_q, their exact rational cohomology,
the combinatorial Vey basis with classification and counts, bigraded minimal
models of the truncated polynomial algebras, and per-manifold inventories of
the characteristic classes they support.
"""

__version__ = "0.1.0"

from .gca import AlgebraSignature, Element, Monomial, SignatureMismatch
from .complexes import (
    CohomologyResult,
    GradedComplex,
    ResourceBudgetError,
    build_complex,
    cohomology,
)
from .vey import (
    ValidationReport,
    VeyClass,
    extended_basis,
    extended_count,
    kappa,
    v_count,
    validate_vey,
    variable_set,
    vey_basis,
)
from .minimal_model import (
    ModelBudgetError,
    ModelStage,
    PoincareSeries,
    RankTable,
    build_model,
    loop_poincare,
    rank_table,
)
from .manifold import (
    ClassRecord,
    ManifoldDescriptor,
    UnsupportedInputError,
    brace_degree,
    fiber_integrate_degree,
    hurewicz_ok,
    preset,
    report,
)

__all__ = [
    "AlgebraSignature",
    "Element",
    "Monomial",
    "SignatureMismatch",
    "CohomologyResult",
    "GradedComplex",
    "ResourceBudgetError",
    "build_complex",
    "cohomology",
    "ValidationReport",
    "VeyClass",
    "extended_basis",
    "extended_count",
    "kappa",
    "v_count",
    "validate_vey",
    "variable_set",
    "vey_basis",
    "ModelBudgetError",
    "ModelStage",
    "PoincareSeries",
    "RankTable",
    "build_model",
    "loop_poincare",
    "rank_table",
    "ClassRecord",
    "ManifoldDescriptor",
    "UnsupportedInputError",
    "brace_degree",
    "fiber_integrate_degree",
    "hurewicz_ok",
    "preset",
    "report",
    "__version__",
]

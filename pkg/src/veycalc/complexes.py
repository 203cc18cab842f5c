"""Finite cochain complexes W_q, WO_q, I_q and their exact cohomology.

The complexes are assembled degree by degree from the monomial bases of
:mod:`veycalc.gca`; differentials are stored as sparse triplet lists of
exact rationals.  Cohomology is computed by elimination over Q and serves
as the brute-force oracle for the combinatorial basis enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import gca, linalg
from .gca import AlgebraSignature, Element, Monomial

DEFAULT_Q_CAP = 6

KINDS = ("W", "WO", "I")


class ResourceBudgetError(RuntimeError):
    """Raised when a requested computation exceeds the configured budget."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


def signature_for(q: int, kind: str) -> AlgebraSignature:
    if kind == "W":
        return AlgebraSignature.W(q)
    if kind == "WO":
        return AlgebraSignature.WO(q)
    if kind == "I":
        return AlgebraSignature.I(q)
    raise ValueError(f"unknown complex kind {kind!r}")


def dimension_estimate(q: int, kind: str) -> int:
    """Total monomial count, computable without building anything."""
    sig = signature_for(q, kind)
    return sum(gca.basis_dimension_series(sig))


Triplet = tuple[int, int, Fraction]


@dataclass
class GradedComplex:
    signature: AlgebraSignature
    kind: str
    bases: dict[int, list[Monomial]]
    diff: dict[int, list[Triplet]]  # degree n -> triplets of d: C^n -> C^(n+1)

    @property
    def q(self) -> int:
        return self.signature.q

    @property
    def top_degree(self) -> int:
        return gca.top_degree(self.signature)

    def basis(self, n: int) -> list[Monomial]:
        return self.bases.get(n, [])

    def diff_matrix(self, n: int) -> linalg.Matrix:
        """Dense matrix of d: C^n -> C^(n+1), rows indexed by the degree-(n+1) basis."""
        rows = len(self.basis(n + 1))
        cols = len(self.basis(n))
        m = linalg.zeros(rows, cols)
        for r, c, v in self.diff.get(n, []):
            m[r][c] += v
        return m

    def element_vector(self, a: Element, n: int) -> list[Fraction]:
        basis = self.basis(n)
        index = {m: i for i, m in enumerate(basis)}
        v = [Fraction(0)] * len(basis)
        for m, coeff in a.terms.items():
            if m not in index:
                raise ValueError(f"monomial {m.label()} not in the degree-{n} basis")
            v[index[m]] = coeff
        return v

    def vector_element(self, v: list[Fraction], n: int) -> Element:
        basis = self.basis(n)
        return Element(self.signature, {m: c for m, c in zip(basis, v)})


def build_complex(q: int, kind: str, q_cap: int = DEFAULT_Q_CAP) -> GradedComplex:
    """Assemble the full complex with per-degree bases and differentials."""
    if q < 1:
        raise ValueError("q must be positive")
    if q > q_cap:
        est = dimension_estimate(q, kind)
        raise ResourceBudgetError(
            f"{kind}_{q} exceeds the configured cap q <= {q_cap} "
            f"(total dimension would be {est})",
            estimate=est,
        )
    sig = signature_for(q, kind)
    bases: dict[int, list[Monomial]] = {}
    for n, basis in gca.iter_basis(sig):
        if basis:
            bases[n] = basis
    diff: dict[int, list[Triplet]] = {}
    for n, basis in bases.items():
        target = {m: i for i, m in enumerate(bases.get(n + 1, []))}
        triplets: list[Triplet] = []
        for col, m in enumerate(basis):
            dm = gca.differential(Element.monomial(sig, m))
            for mm, coeff in dm.sorted_terms():
                triplets.append((target[mm], col, coeff))
        if triplets:
            diff[n] = triplets
    return GradedComplex(sig, kind, bases, diff)


@dataclass
class CohomologyResult:
    kind: str
    q: int
    dims: dict[int, int]
    representatives: dict[int, list[Element]]
    total_dim_check: int = field(default=0)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "q": self.q,
            "dims": {str(n): d for n, d in sorted(self.dims.items())},
            "representatives": {
                str(n): [e.to_json_obj() for e in reps]
                for n, reps in sorted(self.representatives.items())
            },
            "total_dim_check": self.total_dim_check,
        }


def cohomology(cx: GradedComplex) -> CohomologyResult:
    """H^n = ker d_n / im d_(n-1) with deterministic representatives."""
    dims: dict[int, int] = {}
    reps: dict[int, list[Element]] = {}
    total = 0
    for n in range(cx.top_degree + 1):
        basis = cx.basis(n)
        if not basis:
            continue
        d_n = cx.diff_matrix(n)
        kernel = linalg.nullspace(d_n, len(basis))
        d_prev = cx.diff_matrix(n - 1)
        image_rows: linalg.Matrix = []
        if cx.basis(n - 1):
            for col in range(len(cx.basis(n - 1))):
                vec = [d_prev[r][col] for r in range(len(basis))]
                if any(x != 0 for x in vec):
                    image_rows.append(vec)
        rank_im = linalg.rank(image_rows) if image_rows else 0
        dim_h = len(kernel) - rank_im
        # independent check: dim ker - rank of previous differential
        chosen = linalg.independent_complement(image_rows, kernel)
        if len(chosen) != dim_h:
            raise AssertionError(
                f"rank bookkeeping mismatch in degree {n}: {len(chosen)} vs {dim_h}"
            )
        if dim_h:
            dims[n] = dim_h
            reps[n] = [cx.vector_element(kernel[i], n) for i in chosen]
            total += dim_h
    return CohomologyResult(cx.kind, cx.q, dims, reps, total)


def is_cocycle(cx: GradedComplex, a: Element) -> bool:
    if a.is_zero():
        return True
    if not a.is_homogeneous():
        raise ValueError("input must be homogeneous")
    return gca.differential(a).is_zero()


def is_coboundary(cx: GradedComplex, a: Element) -> bool:
    if a.is_zero():
        return True
    if not a.is_homogeneous():
        raise ValueError("input must be homogeneous")
    n = a.degree()
    if not cx.basis(n - 1):
        return False
    target = cx.element_vector(a, n)
    return linalg.solve(cx.diff_matrix(n - 1), target) is not None

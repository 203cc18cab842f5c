"""Combinatorial basis of H*(W_q) and H*(WO_q), classification, and counts.

The cohomology of the truncated complexes has an explicit monomial basis
y_I c_J cut out by index inequalities (the Vey basis).  This module
enumerates it, classifies each class (generalized Godbillon-Vey, residual,
rigid, variable candidate), builds the variable set and its braced
extension, and cross-validates everything against the exact cohomology
oracle in :mod:`veycalc.complexes`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from . import complexes, gca, linalg
from .complexes import GradedComplex
from .gca import AlgebraSignature, Element, Monomial

# Reading of the WO condition "i_1 <= any odd j_k":
#   forall_odd  -- i_1 <= every odd entry of J (vacuously true when J has
#                  no odd entries); reproduces the oracle dimensions.
#   exists_odd  -- i_1 <= some odd entry of J; kept as a switch so that any
#                  divergence is surfaced by validate_vey.
WO_CONDITION_FORALL = "forall_odd"
WO_CONDITION_EXISTS = "exists_odd"


@dataclass(frozen=True)
class VeyClass:
    monomial: Monomial
    complex_kind: str  # "W" or "WO"
    q: int
    degree: int
    is_generalized_gv: bool = False
    is_residual: bool = False
    is_rigid: bool = False
    is_variable_candidate: bool = False

    def name(self) -> str:
        return self.monomial.label()

    def to_json_obj(self) -> dict:
        return {
            "monomial": self.monomial.to_json_obj(),
            "name": self.name(),
            "complex": self.complex_kind,
            "q": self.q,
            "degree": self.degree,
            "generalized_gv": self.is_generalized_gv,
            "residual": self.is_residual,
            "rigid": self.is_rigid,
            "variable_candidate": self.is_variable_candidate,
        }


def _vey_condition(
    i_min: int, cpart: tuple[int, ...], q: int, kind: str, wo_condition: str
) -> bool:
    weight = sum((j + 1) * e for j, e in enumerate(cpart))
    if weight > q:
        return False
    if i_min + weight < q + 1:
        return False
    entries = [j + 1 for j, e in enumerate(cpart) if e > 0]
    if kind == "W":
        # i_1 <= j_1 (smallest part of J); weight >= q+1-i_1 >= 1, so J is nonempty
        return bool(entries) and i_min <= entries[0]
    odd_entries = [j for j in entries if j % 2 == 1]
    if wo_condition == WO_CONDITION_FORALL:
        return all(i_min <= j for j in odd_entries)
    if wo_condition == WO_CONDITION_EXISTS:
        return bool(odd_entries) and any(i_min <= j for j in odd_entries)
    raise ValueError(f"unknown WO condition {wo_condition!r}")


def classify(v: VeyClass) -> VeyClass:
    """Fill the classification flags; pure function of (I, J, q)."""
    m = v.monomial
    q = v.q
    weight = m.weight()
    i1 = m.y_part[0]
    gv = m.y_part == (1,)
    residual = weight == q
    rigid = i1 + weight >= q + 2
    # Variability proxy: degree-(2q+1) non-rigid classes.  Reproduces the
    # known counts v_1=1, v_2=2, v_3=3; rigid classes cannot vary.
    variable = (v.degree == 2 * q + 1) and not rigid
    return replace(
        v,
        is_generalized_gv=gv,
        is_residual=residual,
        is_rigid=rigid,
        is_variable_candidate=variable,
    )


def vey_basis(
    q: int, kind: str, wo_condition: str = WO_CONDITION_FORALL
) -> list[VeyClass]:
    """All Vey-form monomials y_I c_J (s >= 1) for the given complex, classified,
    in canonical order.  Pure c_J survivors (Pontrjagin monomials in WO_q) are
    not Vey-form and are reported by the oracle instead."""
    if q < 1:
        raise ValueError("q must be positive")
    if kind not in ("W", "WO"):
        raise ValueError("kind must be 'W' or 'WO'")
    sig = complexes.signature_for(q, kind)
    odd = sorted(sig.odd_indices)
    out: list[VeyClass] = []
    for r in range(1, len(odd) + 1):
        for ys in itertools.combinations(odd, r):
            for w in range(q + 1):
                for cpart in _c_exponents(q, w):
                    if _vey_condition(ys[0], cpart, q, kind, wo_condition):
                        m = Monomial(ys, cpart)
                        out.append(
                            classify(VeyClass(m, kind, q, m.degree()))
                        )
    out.sort(key=lambda v: v.monomial.sort_key())
    return out


def _c_exponents(q: int, weight: int):
    """Exponent vectors over c_1..c_q of exact weight."""
    def rec(idx: int, remaining: int, acc: list[int]):
        if idx == q:
            if remaining == 0:
                yield tuple(acc)
            return
        j = idx + 1
        for e in range(remaining // j + 1):
            acc.append(e)
            yield from rec(idx + 1, remaining - j * e, acc)
            acc.pop()

    yield from rec(0, weight, [])


def variable_set(q: int, wo_condition: str = WO_CONDITION_FORALL) -> list[VeyClass]:
    """Degree-(2q+1) WO_q Vey classes flagged as independently variable."""
    return [
        v
        for v in vey_basis(q, "WO", wo_condition)
        if v.is_variable_candidate
    ]


def v_count(q: int) -> int:
    return len(variable_set(q))


def kappa(q: int) -> int:
    """Greatest integer with 4*kappa <= q+1 (number of usable Pontrjagin classes)."""
    if q < 1:
        raise ValueError("q must be positive")
    return (q + 1) // 4


@dataclass(frozen=True)
class ExtendedClass:
    base: VeyClass
    i_prime: tuple[int, ...]
    monomial: Monomial
    degree: int

    def name(self) -> str:
        return self.monomial.label()

    def to_json_obj(self) -> dict:
        return {
            "monomial": self.monomial.to_json_obj(),
            "name": self.name(),
            "base": self.base.name(),
            "i_prime": list(self.i_prime),
            "degree": self.degree,
        }


def extended_basis(
    q: int, degree_range: tuple[int, int] | None = None
) -> tuple[list[ExtendedClass], dict[int, int]]:
    """Braced extension of the variable set: y_{i_1} y_{I'} c_J with I' strictly
    increasing even indices, i_1 < i_1' and 2 i_r' <= q+1.  Returns the classes
    (optionally filtered to a closed degree interval) and the per-degree counts
    over the full extension."""
    base = variable_set(q)
    max_iprime = (q + 1) // 2  # 2 i_r' <= q+1
    out: list[ExtendedClass] = []
    counts: dict[int, int] = {}
    for v in base:
        i1 = v.monomial.y_part[0]
        evens = [i for i in range(2, max_iprime + 1, 2) if i > i1]
        for r in range(len(evens) + 1):
            for iprime in itertools.combinations(evens, r):
                ypart = tuple(sorted((i1,) + iprime))
                m = Monomial(ypart, v.monomial.c_part)
                deg = m.degree()
                counts[deg] = counts.get(deg, 0) + 1
                out.append(ExtendedClass(v, iprime, m, deg))
    out.sort(key=lambda e: e.monomial.sort_key())
    if degree_range is not None:
        lo, hi = degree_range
        out = [e for e in out if lo <= e.degree <= hi]
    return out, dict(sorted(counts.items()))


def extended_count(q: int, degree: int) -> int:
    """The count of braced classes in one degree (v-hat_{q,degree})."""
    _, counts = extended_basis(q)
    return counts.get(degree, 0)


@dataclass
class DegreeCheck:
    degree: int
    enumerated: int
    oracle_dim: int
    independent: bool
    notes: list[str] = field(default_factory=list)


@dataclass
class ValidationReport:
    q: int
    kind: str
    per_degree: list[DegreeCheck]
    ok: bool

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "kind": self.kind,
            "ok": self.ok,
            "per_degree": [
                {
                    "degree": c.degree,
                    "enumerated": c.enumerated,
                    "oracle_dim": c.oracle_dim,
                    "independent": c.independent,
                    "notes": c.notes,
                }
                for c in self.per_degree
            ],
        }


def validate_vey(
    q: int,
    kind: str,
    wo_condition: str = WO_CONDITION_FORALL,
    q_cap: int = complexes.DEFAULT_Q_CAP,
) -> ValidationReport:
    """Cross-check the enumerated basis against the cohomology oracle.

    Per degree: every enumerated class must be a cocycle and the classes must
    be independent modulo coboundaries.  In degrees above 2q the enumerated
    count must match the oracle dimension; in low degrees the oracle may see
    extra non-Vey survivors (the unit, surviving Pontrjagin monomials), which
    are listed as notes rather than failures.
    """
    cx = complexes.build_complex(q, kind, q_cap=q_cap)
    hres = complexes.cohomology(cx)
    classes = vey_basis(q, kind, wo_condition)
    by_degree: dict[int, list[VeyClass]] = {}
    for v in classes:
        by_degree.setdefault(v.degree, []).append(v)

    degrees = sorted(set(by_degree) | set(hres.dims))
    checks: list[DegreeCheck] = []
    ok = True
    for n in degrees:
        vs = by_degree.get(n, [])
        dim = hres.dims.get(n, 0)
        notes: list[str] = []
        independent = True
        for v in vs:
            el = Element.monomial(cx.signature, v.monomial)
            if not complexes.is_cocycle(cx, el):
                independent = False
                notes.append(f"{v.name()} is not a cocycle")
        if independent and vs:
            independent = _independent_in_cohomology(cx, n, vs)
            if not independent:
                notes.append("enumerated classes are dependent modulo coboundaries")
        if n > 2 * q and len(vs) != dim:
            ok = False
            notes.append(
                f"count mismatch above 2q: enumerated {len(vs)} vs oracle {dim}"
            )
        if n <= 2 * q and dim > len(vs):
            survivors = [e for e in hres.representatives.get(n, [])]
            labels = ", ".join(
                "+".join(m.label() for m, _ in e.sorted_terms()) for e in survivors
            )
            notes.append(
                f"oracle sees {dim - len(vs)} non-Vey survivor(s) in low degree: {labels}"
            )
        if kind == "W" and q == 2 and n == 8:
            notes.append(
                "degree-8 dimension is 2 (y1y2c1^2 and y1y2c2 both survive); "
                "classical generator tables for this algebra list only y1y2c2"
            )
        if not independent:
            ok = False
        checks.append(DegreeCheck(n, len(vs), dim, independent, notes))
    return ValidationReport(q, kind, checks, ok)


def _independent_in_cohomology(cx: GradedComplex, n: int, vs: list[VeyClass]) -> bool:
    basis = cx.basis(n)
    d_prev = cx.diff_matrix(n - 1)
    image_rows: linalg.Matrix = []
    if cx.basis(n - 1):
        for col in range(len(cx.basis(n - 1))):
            vec = [d_prev[r][col] for r in range(len(basis))]
            if any(x != 0 for x in vec):
                image_rows.append(vec)
    rank_im = linalg.rank(image_rows) if image_rows else 0
    rows = image_rows + [
        cx.element_vector(Element.monomial(cx.signature, v.monomial), n) for v in vs
    ]
    return linalg.rank(rows) == rank_im + len(vs)

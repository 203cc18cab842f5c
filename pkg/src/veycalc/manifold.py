"""Per-manifold inventories of secondary characteristic classes.

Given a descriptor of a codimension-q manifold, list the classes available
on the classifying spaces of its diffeomorphism groups: the total
Godbillon-Vey family, fiber-integration classes, section pullbacks,
cycle-integration classes over co-spherical cycles, and braced classes.
Detection ranks are the variable-class counts from :mod:`veycalc.vey` and
are lower bounds; survival annotations are recorded only where known.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import minimal_model, vey

TARGETS = ("BDiff_delta", "BbarDiff", "MDiff_delta")
METHODS = (
    "fiber_integration",
    "section_pullback",
    "cycle_integration",
    "braced",
    "gv_total",
    # loop_family extends the published method list: it carries the
    # loop-space generating-function data used for open manifolds.
    "loop_family",
)
SURVIVAL = ("yes", "unknown", "killed")


class UnsupportedInputError(ValueError):
    """Raised for descriptors outside the supported rule table."""


@dataclass(frozen=True)
class ManifoldDescriptor:
    q: int
    compact: bool
    closed: bool
    orientable: bool
    parallelizable: bool
    # (degree k, count) with 0 < k < q; the fundamental class (k = q) is implicit
    cospherical_degrees: tuple[tuple[int, int], ...] = ()
    trivialized_over_cycles: bool = False
    label: str = ""

    def __post_init__(self) -> None:
        if self.q < 1:
            raise UnsupportedInputError("dimension q must be positive")
        if not self.orientable:
            raise UnsupportedInputError("non-orientable manifolds are unsupported")
        for k, count in self.cospherical_degrees:
            if not 0 < k < self.q:
                raise UnsupportedInputError(
                    f"co-spherical degree {k} must lie strictly between 0 and {self.q}"
                )
            if count < 1:
                raise UnsupportedInputError("co-spherical counts must be positive")

    def to_json_obj(self) -> dict:
        return {
            "q": self.q,
            "compact": self.compact,
            "closed": self.closed,
            "orientable": self.orientable,
            "parallelizable": self.parallelizable,
            "cospherical_degrees": [list(kc) for kc in self.cospherical_degrees],
            "trivialized_over_cycles": self.trivialized_over_cycles,
            "label": self.label,
        }


@dataclass(frozen=True)
class ClassRecord:
    name: str
    degree: int
    target: str
    method: str
    detection_rank: int
    survives_to_BDiff_delta: str
    note: str = ""

    def __post_init__(self) -> None:
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.survives_to_BDiff_delta not in SURVIVAL:
            raise ValueError(f"unknown survival value {self.survives_to_BDiff_delta!r}")
        if self.detection_rank < 1:
            raise ValueError("detection_rank must be at least 1")

    def to_json_obj(self) -> dict:
        obj = {
            "name": self.name,
            "degree": self.degree,
            "target": self.target,
            "method": self.method,
            "detection_rank": self.detection_rank,
            "survives_to_BDiff_delta": self.survives_to_BDiff_delta,
        }
        if self.note:
            obj["note"] = self.note
        return obj


def fiber_integrate_degree(n: int, q: int) -> int:
    """Degree after integration over a closed q-dimensional fiber."""
    if n < q:
        raise ValueError(f"cannot integrate a degree-{n} class over a {q}-fiber")
    return n - q


def brace_degree(i: int, j: int) -> int:
    """Degree of the brace product of classes in degrees i and j."""
    if i < 1 or j < 1:
        raise ValueError("brace degrees must be positive")
    return i + j - 1


def hurewicz_ok(r: int, k: int) -> str:
    """Rational Hurewicz range for an r-connected space in degree k."""
    if r < 1:
        raise ValueError("connectivity must be at least 1")
    if k <= 2 * r:
        return "iso"
    if k == 2 * r + 1:
        return "surjection"
    return "outside"


def report(m: ManifoldDescriptor) -> list[ClassRecord]:
    """Characteristic-class inventory for the descriptor; pure and deterministic."""
    q = m.q
    records: list[ClassRecord] = []
    if not m.compact and m.parallelizable:
        # Open parallelizable case: only the loop-space family applies.
        return _loop_family_records(q)

    variables = vey.variable_set(q)
    vq = len(variables)

    # (a) the total classes, one per variable class, on the flat-bundle total space
    for v in variables:
        records.append(
            ClassRecord(
                name=f"gv[{v.name()}]",
                degree=2 * q + 1,
                target="MDiff_delta",
                method="gv_total",
                detection_rank=vq,
                survives_to_BDiff_delta="yes",
            )
        )

    # (b) fiber integration over the fundamental class (always applicable:
    # the degree 2q+1 exceeds 2q, and the fundamental class is co-spherical)
    for v in variables:
        records.append(
            ClassRecord(
                name=f"alpha[{v.name()}]",
                degree=fiber_integrate_degree(2 * q + 1, q),
                target="BDiff_delta",
                method="fiber_integration",
                detection_rank=vq,
                survives_to_BDiff_delta="yes",
            )
        )

    # (c) section pullbacks need a global section: compact and parallelizable
    if m.compact and m.parallelizable:
        for v in variables:
            records.append(
                ClassRecord(
                    name=f"beta[{v.name()}]",
                    degree=2 * q + 1,
                    target="BbarDiff",
                    method="section_pullback",
                    detection_rank=vq,
                    survives_to_BDiff_delta="unknown",
                )
            )

    # (d) integration over lower co-spherical cycles needs the tangent bundle
    # trivial over the cycle supports
    if m.parallelizable or m.trivialized_over_cycles:
        cycle_index = 0
        for k, count in sorted(m.cospherical_degrees):
            survival = "killed" if q == 2 and k == 1 else "unknown"
            for _ in range(count):
                cycle_index += 1
                for v in variables:
                    records.append(
                        ClassRecord(
                            name=f"gamma[C_{cycle_index}][{v.name()}]",
                            degree=2 * q + 1 - k,
                            target="BDiff_delta",
                            method="cycle_integration",
                            detection_rank=count * vq,
                            survives_to_BDiff_delta=survival,
                        )
                    )

    # (e) braced classes: need a section (compact and parallelizable) and q >= 3
    if m.compact and m.parallelizable and q >= 3:
        extended, counts = vey.extended_basis(q)
        braced_degrees = sorted(d for d in counts if d > 2 * q + 1)
        for e in extended:
            if e.degree > 2 * q + 1:
                records.append(
                    ClassRecord(
                        name=f"braced[{e.name()}]",
                        degree=e.degree,
                        target="BbarDiff",
                        method="braced",
                        detection_rank=counts[e.degree],
                        survives_to_BDiff_delta="unknown",
                    )
                )
        # additional families: cycle integration of the braced classes over
        # lower co-spherical cycles; sketched but not carried out in detail
        # in the source material, so marked as reader-exercise records
        if q == 3:
            cycle_index = 0
            for k, count in sorted(m.cospherical_degrees):
                for _ in range(count):
                    cycle_index += 1
                    for d in braced_degrees:
                        records.append(
                            ClassRecord(
                                name=f"gamma_braced[C_{cycle_index}][deg{d}]",
                                degree=d - k,
                                target="BDiff_delta",
                                method="cycle_integration",
                                detection_rank=count * vq,
                                survives_to_BDiff_delta="unknown",
                                note="reader-exercise",
                            )
                        )

    records.sort(key=lambda r: (r.degree, r.method, r.name))
    return records


def _loop_family_records(q: int) -> list[ClassRecord]:
    cap = 2 * q + 2
    model = minimal_model.build_model(q, cap)
    series = minimal_model.loop_poincare(minimal_model.rank_table(model), q, cap)
    out = []
    for deg, coeff in enumerate(series.coefficients):
        if deg >= 1 and coeff > 0:
            out.append(
                ClassRecord(
                    name=f"loop[t^{deg}]",
                    degree=deg,
                    target="BbarDiff",
                    method="loop_family",
                    detection_rank=coeff,
                    survives_to_BDiff_delta="unknown",
                )
            )
    return out


def preset(name: str) -> ManifoldDescriptor:
    """Named descriptors: S1, S2, T2, Sigma_g:g, S3, T3, Rq:q."""
    base, _, arg = name.partition(":")
    if base == "S1":
        return ManifoldDescriptor(1, True, True, True, True, (), label="S1")
    if base == "S2":
        return ManifoldDescriptor(2, True, True, True, False, (), label="S2")
    if base == "T2":
        return ManifoldDescriptor(2, True, True, True, True, ((1, 2),), label="T2")
    if base == "Sigma_g":
        if not arg:
            raise UnsupportedInputError("Sigma_g needs a genus, e.g. Sigma_g:2")
        g = int(arg)
        if g < 2:
            raise UnsupportedInputError("Sigma_g needs genus g >= 2")
        return ManifoldDescriptor(
            2,
            True,
            True,
            True,
            False,
            ((1, 2 * g),),
            trivialized_over_cycles=True,
            label=f"Sigma_{g}",
        )
    if base == "S3":
        return ManifoldDescriptor(3, True, True, True, True, (), label="S3")
    if base == "T3":
        return ManifoldDescriptor(
            3, True, True, True, True, ((1, 3), (2, 3)), label="T3"
        )
    if base == "Rq":
        if not arg:
            raise UnsupportedInputError("Rq needs a dimension, e.g. Rq:2")
        q = int(arg)
        return ManifoldDescriptor(q, False, False, True, True, (), label=f"R{q}")
    raise UnsupportedInputError(f"unknown preset {name!r}")

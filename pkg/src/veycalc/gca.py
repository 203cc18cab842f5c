"""Exact graded-commutative algebra with odd generators y_i and even generators c_i.

The algebra carries q odd exterior generators y_1..y_q of degree 2i-1 (a
configurable subset may be disabled) and q even polynomial generators
c_1..c_q of degree 2i.  Products whose total c-weight (sum of j over each
factor c_j) exceeds the weight cap q are identified with zero; this is the
truncation that makes every complex here finite dimensional.  The
differential is d(y_i) = c_i, d(c_i) = 0, extended by the graded Leibniz
rule.

All coefficients are exact rationals (fractions.Fraction).  Elements and
signatures are immutable values; every operation is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping


class SignatureMismatch(ValueError):
    """Raised when combining elements over different algebra signatures."""


@dataclass(frozen=True)
class AlgebraSignature:
    """Shape of one truncated algebra: codimension q and the allowed y-indices."""

    q: int
    odd_indices: frozenset[int]
    weight_cap: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")
        if not self.odd_indices <= frozenset(range(1, self.q + 1)):
            raise ValueError(f"odd_indices {sorted(self.odd_indices)} not within 1..{self.q}")
        if self.weight_cap != self.q:
            raise ValueError("weight_cap must equal q")

    @classmethod
    def W(cls, q: int) -> "AlgebraSignature":
        """Full complex: all of y_1..y_q allowed (framed normal bundle)."""
        return cls(q, frozenset(range(1, q + 1)), q)

    @classmethod
    def WO(cls, q: int) -> "AlgebraSignature":
        """Odd-index y's only: y_1, y_3, ..., y_q' with q' the largest odd integer <= q."""
        return cls(q, frozenset(range(1, q + 1, 2)), q)

    @classmethod
    def I(cls, q: int) -> "AlgebraSignature":
        """Truncated polynomial algebra on c_1..c_q alone (no odd generators)."""
        return cls(q, frozenset(), q)


@dataclass(frozen=True, order=False)
class Monomial:
    """y_I c_J with I strictly increasing and c_part the exponent vector of J."""

    y_part: tuple[int, ...]
    c_part: tuple[int, ...]

    def degree(self) -> int:
        return sum(2 * i - 1 for i in self.y_part) + sum(
            2 * (j + 1) * e for j, e in enumerate(self.c_part)
        )

    def weight(self) -> int:
        return sum((j + 1) * e for j, e in enumerate(self.c_part))

    def partition(self) -> tuple[int, ...]:
        """c-part as the weakly increasing tuple J = (j_1 <= ... <= j_l)."""
        out: list[int] = []
        for j, e in enumerate(self.c_part):
            out.extend([j + 1] * e)
        return tuple(out)

    def sort_key(self) -> tuple:
        # Canonical order: degree, then y-indices, then the partition J.
        # Comparing partitions (not raw exponent vectors) puts e.g. c_1^2
        # before c_2, matching the conventional table ordering.
        return (self.degree(), self.y_part, self.partition())

    def is_valid(self, sig: AlgebraSignature) -> bool:
        if len(self.c_part) != sig.q:
            return False
        if list(self.y_part) != sorted(set(self.y_part)):
            return False
        if not set(self.y_part) <= sig.odd_indices:
            return False
        return self.weight() <= sig.weight_cap

    def label(self) -> str:
        """Human-readable name like 'y1y2c1^2c3' ('1' for the unit)."""
        parts = [f"y{i}" for i in self.y_part]
        for j, e in enumerate(self.c_part):
            if e == 1:
                parts.append(f"c{j + 1}")
            elif e > 1:
                parts.append(f"c{j + 1}^{e}")
        return "".join(parts) or "1"

    def to_json_obj(self) -> dict:
        return {"y": list(self.y_part), "c": list(self.c_part)}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Monomial":
        return cls(tuple(obj["y"]), tuple(obj["c"]))


def unit_monomial(sig: AlgebraSignature) -> Monomial:
    return Monomial((), (0,) * sig.q)


def _merge_y(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Merge two strictly increasing index tuples with the Koszul sign.

    Returns (sign, merged) or None when an index repeats (y_i^2 = 0).
    """
    if set(a) & set(b):
        return None
    inversions = 0
    for x in a:
        inversions += sum(1 for y in b if y < x)
    merged = tuple(sorted(a + b))
    return (-1) ** inversions, merged


class Element:
    """Sparse linear combination of monomials with rational coefficients."""

    __slots__ = ("signature", "terms")

    def __init__(self, signature: AlgebraSignature, terms: Mapping[Monomial, Fraction] | None = None):
        self.signature = signature
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, sig: AlgebraSignature) -> "Element":
        return cls(sig)

    @classmethod
    def one(cls, sig: AlgebraSignature) -> "Element":
        return cls(sig, {unit_monomial(sig): Fraction(1)})

    @classmethod
    def monomial(cls, sig: AlgebraSignature, m: Monomial, coeff=1) -> "Element":
        if not m.is_valid(sig):
            raise ValueError(f"monomial {m} invalid for signature {sig}")
        return cls(sig, {m: Fraction(coeff)})

    @classmethod
    def y(cls, sig: AlgebraSignature, i: int) -> "Element":
        return cls.monomial(sig, Monomial((i,), (0,) * sig.q))

    @classmethod
    def c(cls, sig: AlgebraSignature, i: int) -> "Element":
        e = [0] * sig.q
        e[i - 1] = 1
        return cls.monomial(sig, Monomial((), tuple(e)))

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {m.degree() for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous element (None for zero)."""
        degs = {m.degree() for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Element") -> None:
        if self.signature != other.signature:
            raise SignatureMismatch("elements live over different signatures")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Element(self.signature, out)

    def __neg__(self) -> "Element":
        return Element(self.signature, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, k) -> "Element":
        k = Fraction(k)
        return Element(self.signature, {m: c * k for m, c in self.terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        sig = self.signature
        cap = sig.weight_cap
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            wa = ma.weight()
            for mb, cb in other.terms.items():
                if wa + mb.weight() > cap:
                    continue  # truncation: over-weight products vanish
                merged = _merge_y(ma.y_part, mb.y_part)
                if merged is None:
                    continue
                sign, ypart = merged
                cpart = tuple(a + b for a, b in zip(ma.c_part, mb.c_part))
                m = Monomial(ypart, cpart)
                out[m] = out.get(m, Fraction(0)) + sign * ca * cb
        return Element(sig, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.signature == other.signature
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.signature, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            bits.append(f"{c}*{m.label()}" if c != 1 else m.label())
        return " + ".join(bits)

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> list:
        return [
            {"m": m.to_json_obj(), "coeff": str(c)} for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, sig: AlgebraSignature, obj) -> "Element":
        terms = {
            Monomial.from_json_obj(t["m"]): Fraction(t["coeff"]) for t in obj
        }
        return cls(sig, terms)


# -- module-level operations ------------------------------------------------


def degree(m: Monomial) -> int:
    return m.degree()


def multiply(a: Element, b: Element) -> Element:
    return a * b


def differential(a: Element) -> Element:
    """d(y_i) = c_i, d(c_i) = 0, extended by the graded Leibniz rule."""
    sig = a.signature
    cap = sig.weight_cap
    out: dict[Monomial, Fraction] = {}
    for m, coeff in a.terms.items():
        w = m.weight()
        for k, i in enumerate(m.y_part):
            if w + i > cap:
                continue  # the c_i factor would push the weight over the cap
            sign = (-1) ** k  # d passes over the first k odd generators
            ypart = m.y_part[:k] + m.y_part[k + 1 :]
            cpart = list(m.c_part)
            cpart[i - 1] += 1
            mm = Monomial(ypart, tuple(cpart))
            out[mm] = out.get(mm, Fraction(0)) + sign * coeff
    return Element(sig, out)


@lru_cache(maxsize=None)
def _c_parts(q: int, cap: int, cdeg: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors over c_1..c_q of graded degree cdeg and weight <= cap."""
    if cdeg % 2 != 0 or cdeg < 0:
        return ()
    target = cdeg // 2  # graded degree 2*weight, so degree fixes the weight
    if target > cap:
        return ()

    out: list[tuple[int, ...]] = []

    def rec(idx: int, remaining: int, acc: list[int]) -> None:
        if idx == q:
            if remaining == 0:
                out.append(tuple(acc))
            return
        j = idx + 1
        for e in range(remaining // j + 1):
            acc.append(e)
            rec(idx + 1, remaining - j * e, acc)
            acc.pop()

    rec(0, target, [])
    return tuple(out)


def basis_of_degree(sig: AlgebraSignature, n: int) -> list[Monomial]:
    """All valid monomials of degree n, in canonical order (deterministic)."""
    if n < 0:
        return []
    odd = sorted(sig.odd_indices)
    out: list[Monomial] = []
    for r in range(len(odd) + 1):
        for ys in itertools.combinations(odd, r):
            ydeg = sum(2 * i - 1 for i in ys)
            if ydeg > n:
                continue
            for cpart in _c_parts(sig.q, sig.weight_cap, n - ydeg):
                out.append(Monomial(ys, cpart))
    out.sort(key=Monomial.sort_key)
    return out


def iter_basis(sig: AlgebraSignature) -> Iterator[tuple[int, list[Monomial]]]:
    """Per-degree bases from 0 up to the top degree of the algebra."""
    for n in range(top_degree(sig) + 1):
        yield n, basis_of_degree(sig, n)


def top_degree(sig: AlgebraSignature) -> int:
    return sum(2 * i - 1 for i in sig.odd_indices) + 2 * sig.weight_cap


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int) -> int:
    """Number of partitions of n into parts <= max_part (independent count)."""
    if n == 0:
        return 1
    if n < 0 or max_part == 0:
        return 0
    return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1)


def basis_dimension_series(sig: AlgebraSignature) -> list[int]:
    """Generating-function count of monomials per degree, independent of the
    enumerator: product of (1 + t^(2i-1)) over allowed y-indices times the
    weight-truncated polynomial series counted by partitions."""
    top = top_degree(sig)
    series = [0] * (top + 1)
    series[0] = 1
    for i in sorted(sig.odd_indices):
        d = 2 * i - 1
        nxt = series[:]
        for k in range(top + 1 - d):
            nxt[k + d] += series[k]
        series = nxt
    out = [0] * (top + 1)
    for w in range(sig.weight_cap + 1):
        cnt = partition_count(w, sig.q)
        for k in range(top + 1 - 2 * w):
            out[k + 2 * w] += series[k] * cnt
    return out

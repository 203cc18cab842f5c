"""Bigraded minimal model of the truncated polynomial algebra I_q.

The target algebra has zero differential, so the model is built stagewise,
lower degree first: at degree n, new closed generators hit the cokernel of
H^n(model) -> I_q^n, and further degree-n generators are given differentials
killing the kernel of H^(n+1)(model) -> I_q^(n+1).  Generator counts per
degree are the dual homotopy ranks; the free-algebra Poincare series of a
rank table after delooping describes the loop-space homology families.

Everything is exact (Fraction coefficients) and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import gca, linalg
from .gca import AlgebraSignature, Element

DEFAULT_MODEL_DEGREE_CAP = 12
DEFAULT_WORD_BUDGET = 50_000


class ModelBudgetError(RuntimeError):
    def __init__(self, message: str, attempted_dimension: int):
        super().__init__(message)
        self.attempted_dimension = attempted_dimension


# A word in the free algebra is a sparse, index-sorted exponent tuple:
# ((gen_index, exponent), ...).  Odd-degree generators square to zero.
Word = tuple[tuple[int, int], ...]
FreeElement = dict[Word, Fraction]

UNIT_WORD: Word = ()


class FreeAlgebra:
    """Free graded-commutative algebra on an append-only generator list."""

    def __init__(self) -> None:
        self.gids: list[str] = []
        self.degrees: list[int] = []
        self.diffs: list[FreeElement] = []

    def add_generator(self, gid: str, degree: int, diff: FreeElement) -> int:
        idx = len(self.gids)
        self.gids.append(gid)
        self.degrees.append(degree)
        self.diffs.append(diff)
        return idx

    # -- words -----------------------------------------------------------

    def word_degree(self, w: Word) -> int:
        return sum(self.degrees[i] * e for i, e in w)

    def word_label(self, w: Word) -> str:
        if not w:
            return "1"
        return "".join(
            self.gids[i] + (f"^{e}" if e > 1 else "") for i, e in w
        )

    def mul_words(self, a: Word, b: Word) -> tuple[int, Word] | None:
        a_odd = [i for i, e in a if self.degrees[i] % 2 == 1]
        b_odd = [i for i, e in b if self.degrees[i] % 2 == 1]
        if set(a_odd) & set(b_odd):
            return None
        inversions = sum(1 for x in a_odd for y in b_odd if y < x)
        exps: dict[int, int] = dict(a)
        for i, e in b:
            exps[i] = exps.get(i, 0) + e
        word = tuple(sorted(exps.items()))
        return (-1) ** inversions, word

    # -- elements ----------------------------------------------------------

    def zero(self) -> FreeElement:
        return {}

    def gen_element(self, idx: int) -> FreeElement:
        return {((idx, 1),): Fraction(1)}

    def add(self, a: FreeElement, b: FreeElement) -> FreeElement:
        out = dict(a)
        for w, c in b.items():
            nc = out.get(w, Fraction(0)) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return out

    def scale(self, a: FreeElement, k: Fraction) -> FreeElement:
        if k == 0:
            return {}
        return {w: c * k for w, c in a.items()}

    def mul(self, a: FreeElement, b: FreeElement) -> FreeElement:
        out: FreeElement = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                prod = self.mul_words(wa, wb)
                if prod is None:
                    continue
                sign, w = prod
                nc = out.get(w, Fraction(0)) + sign * ca * cb
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
        return out

    def differential(self, a: FreeElement) -> FreeElement:
        out: FreeElement = {}
        for word, coeff in a.items():
            prefix_deg = 0
            for t, (idx, e) in enumerate(word):
                dg = self.diffs[idx]
                gdeg = self.degrees[idx]
                if dg:
                    # word = prefix * g^e * suffix; d hits the g^e block
                    prefix: Word = word[:t]
                    suffix: Word = word[t + 1 :]
                    block: Word = ((idx, e - 1),) if e > 1 else UNIT_WORD
                    factor = Fraction(e if gdeg % 2 == 0 else 1)
                    term: FreeElement = {prefix: Fraction(1)}
                    term = self.mul(term, {block: Fraction(1)})
                    term = self.mul(term, dg)
                    term = self.mul(term, {suffix: Fraction(1)})
                    sign = (-1) ** prefix_deg
                    out = self.add(out, self.scale(term, coeff * factor * sign))
                prefix_deg += gdeg * e
        return out

    def basis(self, degree: int) -> list[Word]:
        """All words of the given total degree, in deterministic order."""
        out: list[Word] = []

        def rec(idx: int, remaining: int, acc: list[tuple[int, int]]) -> None:
            if remaining == 0:
                out.append(tuple(acc))
                return
            if idx == len(self.degrees):
                return
            d = self.degrees[idx]
            max_e = 1 if d % 2 == 1 else remaining // d
            max_e = min(max_e, remaining // d)
            rec(idx + 1, remaining, acc)
            for e in range(1, max_e + 1):
                acc.append((idx, e))
                rec(idx + 1, remaining - d * e, acc)
                acc.pop()

        if degree >= 0:
            rec(0, degree, [])
        out.sort()
        return out


@dataclass
class ModelStage:
    q: int
    degree_cap: int
    algebra: FreeAlgebra
    generators: dict[int, list[str]]  # degree -> generator ids
    differentials: dict[str, FreeElement]
    images: dict[str, Element]  # quasi-iso map psi into I_q
    quasi_iso_check: dict[int, bool]

    def generator_ranks(self) -> dict[int, int]:
        return {d: len(g) for d, g in sorted(self.generators.items()) if g}

    def to_json_obj(self) -> dict:
        alg = self.algebra
        return {
            "q": self.q,
            "degree_cap": self.degree_cap,
            "generators": {
                str(d): list(g) for d, g in sorted(self.generators.items()) if g
            },
            "differentials": {
                gid: sorted(
                    ({"word": alg.word_label(w), "coeff": str(c)} for w, c in d.items()),
                    key=lambda t: t["word"],
                )
                for gid, d in self.differentials.items()
                if d
            },
            "quasi_iso_check": {str(n): ok for n, ok in sorted(self.quasi_iso_check.items())},
        }


class _ModelBuilder:
    def __init__(self, q: int, cap: int, word_budget: int):
        self.q = q
        self.cap = cap
        self.word_budget = word_budget
        self.sig = AlgebraSignature.I(q)
        self.alg = FreeAlgebra()
        self.generators: dict[int, list[str]] = {}
        self.diffs: dict[str, FreeElement] = {}
        self.psi: dict[str, Element] = {}
        self._psi_cache: dict[Word, Element] = {UNIT_WORD: Element.one(self.sig)}

    def _budget_check(self, n: int, count: int) -> None:
        if count > self.word_budget:
            raise ModelBudgetError(
                f"free-algebra basis at degree {n} has {count} words, "
                f"over the budget of {self.word_budget}",
                attempted_dimension=count,
            )

    def _psi_word(self, w: Word) -> Element:
        cached = self._psi_cache.get(w)
        if cached is not None:
            return cached
        out = Element.one(self.sig)
        for idx, e in w:
            g_img = self.psi[self.alg.gids[idx]]
            if g_img.is_zero():
                out = Element.zero(self.sig)
                break
            for _ in range(e):
                out = out * g_img
        self._psi_cache[w] = out
        return out

    def _psi_vector(self, elem: FreeElement, target_basis, target_index) -> list[Fraction]:
        v = [Fraction(0)] * len(target_basis)
        for w, c in elem.items():
            img = self._psi_word(w)
            for m, cc in img.terms.items():
                v[target_index[m]] += c * cc
        return v

    def _cohomology_reps(self, n: int) -> list[FreeElement]:
        """Cocycle representatives of a basis of H^n(model)."""
        basis_n = self.alg.basis(n)
        self._budget_check(n, len(basis_n))
        if not basis_n:
            return []
        basis_up = self.alg.basis(n + 1)
        index_up = {w: i for i, w in enumerate(basis_up)}
        mat = linalg.zeros(len(basis_up), len(basis_n))
        for col, w in enumerate(basis_n):
            for ww, c in self.alg.differential({w: Fraction(1)}).items():
                mat[index_up[ww]][col] += c
        kernel = linalg.nullspace(mat, len(basis_n))
        basis_dn = self.alg.basis(n - 1)
        index_n = {w: i for i, w in enumerate(basis_n)}
        image_rows: linalg.Matrix = []
        for w in basis_dn:
            dv = self.alg.differential({w: Fraction(1)})
            if dv:
                row = [Fraction(0)] * len(basis_n)
                for ww, c in dv.items():
                    row[index_n[ww]] += c
                image_rows.append(row)
        chosen = linalg.independent_complement(image_rows, kernel)
        reps = []
        for i in chosen:
            rep: FreeElement = {}
            for w, c in zip(basis_n, kernel[i]):
                if c:
                    rep[w] = c
            reps.append(rep)
        return reps

    def _stage(self, n: int) -> None:
        target_basis = gca.basis_of_degree(self.sig, n)
        target_index = {m: i for i, m in enumerate(target_basis)}
        # (a) new closed generators hitting the cokernel of H^n -> I_q^n
        reps = self._cohomology_reps(n)
        image_rows = [self._psi_vector(r, target_basis, target_index) for r in reps]
        identity = [
            [Fraction(1) if j == i else Fraction(0) for j in range(len(target_basis))]
            for i in range(len(target_basis))
        ]
        for pick in linalg.independent_complement(image_rows, identity):
            mono = target_basis[pick]
            gid = f"x{n}_{len(self.generators.get(n, []))}"
            self.alg.add_generator(gid, n, {})
            self.generators.setdefault(n, []).append(gid)
            self.diffs[gid] = {}
            self.psi[gid] = Element.monomial(self.sig, mono)
            self._psi_cache = {UNIT_WORD: Element.one(self.sig)}
        # (b) degree-n generators killing the kernel of H^(n+1) -> I_q^(n+1)
        if n + 1 > self.cap:
            return
        up_basis = gca.basis_of_degree(self.sig, n + 1)
        up_index = {m: i for i, m in enumerate(up_basis)}
        reps_up = self._cohomology_reps(n + 1)
        if not reps_up:
            return
        # columns: psi-images of the classes; nullspace = kernel combinations
        cols = [self._psi_vector(r, up_basis, up_index) for r in reps_up]
        if up_basis:
            mat = [[cols[j][i] for j in range(len(reps_up))] for i in range(len(up_basis))]
        else:
            mat = []
        for combo in linalg.nullspace(mat, len(reps_up)):
            target: FreeElement = {}
            for coeff, rep in zip(combo, reps_up):
                if coeff:
                    target = self.alg.add(target, self.alg.scale(rep, coeff))
            gid = f"w{n}_{len(self.generators.get(n, []))}"
            self.alg.add_generator(gid, n, target)
            self.generators.setdefault(n, []).append(gid)
            self.diffs[gid] = target
            self.psi[gid] = Element.zero(self.sig)
            self._psi_cache = {UNIT_WORD: Element.one(self.sig)}

    def build(self) -> ModelStage:
        for n in range(2, self.cap):
            self._stage(n)
        check = {}
        for n in range(2, self.cap):
            dim_model = len(self._cohomology_reps(n))
            dim_target = len(gca.basis_of_degree(self.sig, n))
            check[n] = dim_model == dim_target
        model = ModelStage(
            self.q, self.cap, self.alg, self.generators, self.diffs, self.psi, check
        )
        _assert_minimal(model)
        return model


def _assert_minimal(model: ModelStage) -> None:
    for gid, d in model.differentials.items():
        for w in d:
            if len(w) == 1 and w[0][1] == 1:
                raise AssertionError(
                    f"differential of {gid} has the linear term {model.algebra.word_label(w)}"
                )


def build_model(
    q: int,
    degree_cap: int,
    word_budget: int = DEFAULT_WORD_BUDGET,
) -> ModelStage:
    """Stagewise bigraded model of I_q, certified through degree_cap - 1."""
    if q < 1:
        raise ValueError("q must be positive")
    if degree_cap < 2:
        raise ValueError("degree cap must be at least 2")
    return _ModelBuilder(q, degree_cap, word_budget).build()


@dataclass
class RankTable:
    q: int
    ranks: dict[int, int]

    def to_json_obj(self) -> dict:
        return {"q": self.q, "ranks": {str(d): r for d, r in sorted(self.ranks.items())}}


def rank_table(model: ModelStage) -> RankTable:
    """Dual homotopy ranks: generator counts of the model per degree."""
    return RankTable(model.q, model.generator_ranks())


@dataclass
class PoincareSeries:
    coefficients: list[int]

    def to_json_obj(self) -> dict:
        return {"coefficients": list(self.coefficients)}


def _mul_series(a: list[int], b: list[int], cap: int) -> list[int]:
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        if x == 0 or i > cap:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += x * y
    return out


def loop_poincare(ranks: RankTable | dict[int, int], loops: int, cap: int) -> PoincareSeries:
    """Poincare series of the free graded-commutative algebra on the
    delooped generating set: each degree-m generator count shifts to m - loops
    (dropping nonpositive degrees); odd generators contribute (1 + t^m),
    even generators 1/(1 - t^m)."""
    if loops < 0:
        raise ValueError("loops must be nonnegative")
    g = ranks.ranks if isinstance(ranks, RankTable) else ranks
    series = [0] * (cap + 1)
    series[0] = 1
    for deg in sorted(g):
        count = g[deg]
        m = deg - loops
        if m <= 0 or count == 0:
            continue
        if m % 2 == 1:
            factor = [0] * (cap + 1)
            factor[0] = 1
            if m <= cap:
                factor[m] = 1
            for _ in range(count):
                series = _mul_series(series, factor, cap)
        else:
            geometric = [1 if k % m == 0 else 0 for k in range(cap + 1)]
            for _ in range(count):
                series = _mul_series(series, geometric, cap)
    return PoincareSeries(series)

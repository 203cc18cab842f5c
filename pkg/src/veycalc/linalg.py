"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows of Fraction.  Everything is deterministic:
pivots are always chosen as the first nonzero entry in column order, so
ranks, echelon forms, and nullspace bases are reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]
Matrix = list[Row]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (echelon matrix, pivot columns)."""
    m = [row[:] for row in mat]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: Matrix) -> int:
    return len(rref(mat)[1])


def nullspace(mat: Matrix, ncols: int) -> list[Row]:
    """Basis of {x : mat @ x = 0}, canonical (one vector per free column)."""
    if not mat:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)] for i in range(ncols)]
    ech, pivots = rref(mat)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Row] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -ech[r][f]
        basis.append(v)
    return basis


def solve(mat: Matrix, b: Row) -> Row | None:
    """One solution of mat @ x = b, or None if inconsistent."""
    if not mat:
        return None if any(x != 0 for x in b) else []
    ncols = len(mat[0])
    aug = [row[:] + [bb] for row, bb in zip(mat, b)]
    ech, pivots = rref(aug)
    for r in range(len(ech)):
        if all(ech[r][c] == 0 for c in range(ncols)) and ech[r][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = ech[r][ncols]
    return x


def independent_complement(span_rows: Matrix, candidates: Matrix) -> list[int]:
    """Indices of candidate rows that extend the row span, greedily in order.

    Used to pick cohomology representatives: rows of `span_rows` generate the
    coboundaries, candidates are kernel vectors in canonical order.
    """
    work: Matrix = [r[:] for r in span_rows]
    chosen: list[int] = []
    base = rank(work) if work else 0
    for idx, cand in enumerate(candidates):
        trial = work + [cand[:]]
        if rank(trial) > base:
            work = trial
            base += 1
            chosen.append(idx)
    return chosen

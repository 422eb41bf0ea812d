"""Fraction-free (Bareiss) elimination over polynomial rings and the field K.

Matrices over K are cleared row by row to polynomial matrices, eliminated
without fractions (every division is exact by Sylvester's identity), and only
converted back to ``RatFunc`` at the end.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from gmpy2 import mpq

from .poly import Poly, poly_cofactors, poly_gcd_many
from .ratfunc import RatFunc

PolyMatrix = List[List[Poly]]


def _cost(p: Poly):
    return (len(p), p.degree())


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_constant:
        return b
    if b.is_constant:
        return a
    _, _, cb = poly_cofactors(a, b)
    return a * cb


def clear_row(row: Sequence[RatFunc]) -> List[Poly]:
    """Multiply a row over K by the lcm of its denominators."""
    den = Poly.const(1)
    for x in row:
        if not x.den.is_constant:
            den = poly_lcm(den, x.den)
    if den.is_constant:
        return [x.num for x in row]
    return [x.num * den.exquo(x.den) if x else Poly() for x in row]


def bareiss_rank(matrix: Sequence[Sequence[Poly]]) -> int:
    """Rank over the fraction field, Bareiss elimination with full pivoting."""
    A = [list(r) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    prev = Poly.const(1)
    k = 0
    while k < m and k < n:
        best = None
        for i in range(k, m):
            row = A[i]
            for j in range(k, n):
                e = row[j]
                if e:
                    c = _cost(e)
                    if best is None or c < best[0]:
                        best = (c, i, j)
                        if c == (1, 0):
                            break
            if best is not None and best[0] == (1, 0):
                break
        if best is None:
            break
        _, pi, pj = best
        A[k], A[pi] = A[pi], A[k]
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
        p = A[k][k]
        pivot_row = A[k]
        for i in range(k + 1, m):
            row = A[i]
            a = row[k]
            for j in range(k + 1, n):
                x = row[j]
                if a:
                    y = pivot_row[j]
                    val = p * x - a * y if y else p * x
                elif x:
                    val = p * x
                else:
                    continue
                row[j] = val.exquo(prev) if not prev.is_constant else val.scale(1 / prev.constant_value())
            row[k] = Poly()
        prev = p
        k += 1
    return k


def rref_den(matrix: Sequence[Sequence[Poly]]) -> Tuple[PolyMatrix, List[int], Poly]:
    """Fraction-free Gauss-Jordan elimination in natural column order.

    Returns ``(A, pivot_cols, den)`` where ``A`` equals ``den`` times the
    reduced row echelon form (zero rows last).
    """
    A = [list(r) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    den = Poly.const(1)
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        cands = [i for i in range(r, m) if A[i][c]]
        if not cands:
            continue
        i = min(cands, key=lambda i: _cost(A[i][c]))
        A[r], A[i] = A[i], A[r]
        p = A[r][c]
        prow = A[r]
        const_den = den.is_constant
        inv = 1 / den.constant_value() if const_den else None
        for i in range(m):
            if i == r:
                continue
            row = A[i]
            a = row[c]
            new = []
            for j in range(n):
                x = row[j]
                if a and prow[j]:
                    val = p * x - a * prow[j] if x else -(a * prow[j])
                elif x:
                    val = p * x
                else:
                    new.append(x)
                    continue
                new.append(val.scale(inv) if const_den else val.exquo(den))
            A[i] = new
        den = p
        pivots.append(c)
        r += 1
    return A, pivots, den


def _normalize_vector(v: List[Poly]) -> List[Poly]:
    g = poly_gcd_many(v)
    if not g.is_constant:
        v = [x.exquo(g) if x else x for x in v]
    # unit content, first nonzero entry positive
    c = mpq(0)
    for x in v:
        if x:
            c = x.content() if not c else _qgcd(c, x.content())
    lead = next(x for x in v if x)
    if lead.leading_coeff() < 0:
        c = -c
    return [x.scale(1 / c) for x in v]


def _qgcd(a: mpq, b: mpq) -> mpq:
    import gmpy2

    return mpq(gmpy2.gcd(a.numerator, b.numerator), gmpy2.lcm(a.denominator, b.denominator))


class MatK:
    """Rectangular matrix with entries in K."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = [tuple(RatFunc.coerce(x) for x in r) for r in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def cleared(self) -> PolyMatrix:
        return [clear_row(r) for r in self.rows]

    def evaluate(self, assignment):
        return [[x.evaluate(assignment) for x in r] for r in self.rows]

    def __repr__(self):
        return f"MatK({[[str(x) for x in r] for r in self.rows]})"


def matk_rank(m: MatK) -> int:
    if not m.rows:
        return 0
    return bareiss_rank(m.cleared())


def matk_kernel(m: MatK) -> List[Tuple[RatFunc, ...]]:
    """Basis of the right kernel over K, entries polynomial with unit content."""
    n = m.ncols
    if not m.rows:
        return [tuple(RatFunc(1) if i == j else RatFunc() for i in range(n)) for j in range(n)]
    A, pivots, den = rref_den(m.cleared())
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for f in free:
        v = [Poly() for _ in range(n)]
        v[f] = den
        for k, pc in enumerate(pivots):
            v[pc] = -A[k][f]
        v = _normalize_vector(v)
        out.append(tuple(RatFunc(x, 1, _reduced=True) for x in v))
    return out


def matk_rref(m: MatK) -> Tuple[List[Tuple[RatFunc, ...]], List[int]]:
    """Canonical reduced row echelon form over K (nonzero rows only)."""
    if not m.rows:
        return [], []
    A, pivots, den = rref_den(m.cleared())
    rows = []
    for k, pc in enumerate(pivots):
        rows.append(tuple(RatFunc(x, A[k][pc]) if x else RatFunc() for x in A[k]))
    return rows, pivots


def rank_q(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by plain Gaussian elimination."""
    A = [[mpq(x) for x in r] for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            f = A[i][c]
            if f:
                f = f / p
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r

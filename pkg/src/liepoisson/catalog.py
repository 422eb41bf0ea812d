"""Built-in Lie algebras with structure constants over Q."""
from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from gmpy2 import mpq

from .errors import DimensionMismatch, UnknownName
from .liealg import LieAlgebra

Matrix = List[List[mpq]]

NAMES = ("gl", "sl", "so", "sp", "heis", "strictly_upper", "borel_sl2", "abelian", "filiform", "oscillator")
CLASSICAL = ("gl", "sl", "so", "sp")


def _unit_matrix(n: int, i: int, j: int) -> Matrix:
    m = [[mpq(0)] * n for _ in range(n)]
    m[i][j] = mpq(1)
    return m


def _madd(a: Matrix, b: Matrix, s=1) -> Matrix:
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), mpq(0)) for j in range(n)] for i in range(n)]


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return _madd(_mmul(a, b), _mmul(b, a), -1)


def _flat(m: Matrix) -> List[mpq]:
    return [x for row in m for x in row]


class _Decomposer:
    """Coordinates of matrices with respect to a linearly independent basis."""

    def __init__(self, basis: Sequence[Matrix]):
        rows = [_flat(b) for b in basis]
        d = len(rows)
        # track T with T * B = R (R in echelon form)
        T = [[mpq(1) if i == j else mpq(0) for j in range(d)] for i in range(d)]
        R = [list(r) for r in rows]
        pivots = []
        r = 0
        for c in range(len(R[0]) if R else 0):
            p = next((i for i in range(r, d) if R[i][c]), None)
            if p is None:
                continue
            R[r], R[p] = R[p], R[r]
            T[r], T[p] = T[p], T[r]
            inv = 1 / R[r][c]
            R[r] = [x * inv for x in R[r]]
            T[r] = [x * inv for x in T[r]]
            for i in range(d):
                if i != r and R[i][c]:
                    f = R[i][c]
                    R[i] = [x - f * y for x, y in zip(R[i], R[r])]
                    T[i] = [x - f * y for x, y in zip(T[i], T[r])]
            pivots.append(c)
            r += 1
        if r != d:
            raise DimensionMismatch("matrix basis is linearly dependent")
        self.R, self.T, self.pivots, self.d = R, T, pivots, d

    def coords(self, m: Matrix) -> List[mpq]:
        v = _flat(m)
        out = [mpq(0)] * self.d
        resid = list(v)
        for k, p in enumerate(self.pivots):
            c = resid[p]
            if c:
                resid = [x - c * y for x, y in zip(resid, self.R[k])]
                for i in range(self.d):
                    out[i] += c * self.T[k][i]
        if any(resid):
            raise DimensionMismatch("matrix not in the span of the basis")
        return out


def from_matrix_basis(name: str, mats: Sequence[Matrix], labels: Sequence[str], meta: dict) -> LieAlgebra:
    dec = _Decomposer(mats)
    consts: Dict[Tuple[int, int], Dict[int, mpq]] = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            c = dec.coords(_commutator(mats[i], mats[j]))
            nz = {k: x for k, x in enumerate(c) if x}
            if nz:
                consts[(i, j)] = nz
    meta = dict(meta, matrices=[[list(r) for r in m] for m in mats])
    return LieAlgebra(len(mats), labels, consts, name=name, meta=meta)


def gl(n: int) -> LieAlgebra:
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            mats.append(_unit_matrix(n, i, j))
            labels.append(f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}")
    return from_matrix_basis(f"gl{n}", mats, labels, {"classical": "gl", "n": n})


def sl(n: int) -> LieAlgebra:
    if n < 2:
        raise DimensionMismatch("sl needs size >= 2")
    if n == 2:
        e = _unit_matrix(2, 0, 1)
        f = _unit_matrix(2, 1, 0)
        h = _madd(_unit_matrix(2, 0, 0), _unit_matrix(2, 1, 1), -1)
        return from_matrix_basis("sl2", [e, f, h], ["e", "f", "h"], {"classical": "sl", "n": 2})
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(_unit_matrix(n, i, j))
                labels.append(f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}")
    for i in range(n - 1):
        mats.append(_madd(_unit_matrix(n, i, i), _unit_matrix(n, i + 1, i + 1), -1))
        labels.append(f"H{i + 1}")
    return from_matrix_basis(f"sl{n}", mats, labels, {"classical": "sl", "n": n})


def so(n: int) -> LieAlgebra:
    if n < 2:
        raise DimensionMismatch("so needs size >= 2")
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_madd(_unit_matrix(n, i, j), _unit_matrix(n, j, i), -1))
            labels.append(f"A{i + 1}{j + 1}" if n < 10 else f"A{i + 1}_{j + 1}")
    return from_matrix_basis(f"so{n}", mats, labels, {"classical": "so", "n": n})


def sp(size: int) -> LieAlgebra:
    """sp of the form [[0, I], [-I, 0]] on Q^size; size must be even."""
    if size < 2 or size % 2:
        raise DimensionMismatch("sp needs an even size >= 2")
    m = size // 2
    mats, labels = [], []
    for i in range(m):
        for j in range(m):
            mats.append(_madd(_unit_matrix(size, i, j), _unit_matrix(size, m + j, m + i), -1))
            labels.append(f"A{i + 1}{j + 1}")
    for i in range(m):
        for j in range(i, m):
            b = _unit_matrix(size, i, m + j)
            if i != j:
                b = _madd(b, _unit_matrix(size, j, m + i))
            mats.append(b)
            labels.append(f"B{i + 1}{j + 1}")
    for i in range(m):
        for j in range(i, m):
            c = _unit_matrix(size, m + i, j)
            if i != j:
                c = _madd(c, _unit_matrix(size, m + j, i))
            mats.append(c)
            labels.append(f"C{i + 1}{j + 1}")
    return from_matrix_basis(f"sp{size}", mats, labels, {"classical": "sp", "n": size})


def heis(dim: int) -> LieAlgebra:
    """Heisenberg algebra of dimension 2k+1 with [x_i, y_i] = z."""
    if dim < 1 or dim % 2 == 0:
        raise DimensionMismatch("Heisenberg dimension must be odd")
    k = (dim - 1) // 2
    if k == 1:
        labels = ["x", "y", "z"]
    else:
        labels = [f"x{i + 1}" for i in range(k)] + [f"y{i + 1}" for i in range(k)] + ["z"]
    consts = {(i, k + i): {2 * k: 1} for i in range(k)}
    return LieAlgebra(dim, labels, consts, name=f"heis{dim}", meta={"solvable": True})


def strictly_upper(n: int) -> LieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        raise DimensionMismatch("strictly_upper needs size >= 2")
    index = {p: k for k, p in enumerate(pairs)}
    consts = {}
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if a < b:
                res = {}
                if j == k:
                    res[index[(i, l)]] = 1
                if l == i:
                    res[index[(k, j)]] = res.get(index[(k, j)], 0) - 1
                if res:
                    consts[(a, b)] = res
    labels = [f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}" for i, j in pairs]
    return LieAlgebra(len(pairs), labels, consts, name=f"strictly_upper{n}", meta={"solvable": True})


def borel_sl2() -> LieAlgebra:
    return LieAlgebra(2, ["h", "e"], {(0, 1): {1: 1}}, name="borel_sl2", meta={"solvable": True})


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise DimensionMismatch("abelian needs size >= 1")
    return LieAlgebra(n, [f"x{i + 1}" for i in range(n)], {}, name=f"abelian{n}", meta={"solvable": True})


def filiform(n: int) -> LieAlgebra:
    """Standard graded filiform algebra: [e1, e_i] = e_{i+1}."""
    if n < 2:
        raise DimensionMismatch("filiform needs size >= 2")
    consts = {(0, i): {i + 1: 1} for i in range(1, n - 1)}
    return LieAlgebra(n, [f"e{i + 1}" for i in range(n)], consts, name=f"filiform{n}", meta={"solvable": True})


def oscillator() -> LieAlgebra:
    """Rotation h acting on the Heisenberg algebra <x, y, z>."""
    consts = {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {3: 1}}
    return LieAlgebra(4, ["h", "x", "y", "z"], consts, name="oscillator", meta={"solvable": True})


def catalog(name: str, size: int = 0) -> LieAlgebra:
    builders = {
        "gl": gl, "sl": sl, "so": so, "sp": sp, "heis": heis,
        "strictly_upper": strictly_upper, "abelian": abelian, "filiform": filiform,
    }
    if name in builders:
        return builders[name](size)
    if name == "borel_sl2":
        return borel_sl2()
    if name == "oscillator":
        return oscillator()
    raise UnknownName(f"unknown catalog algebra {name!r}")

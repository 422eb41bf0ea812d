"""Lie algebras over K given by structure constants, and structural algorithms.

Vectors are tuples of ``RatFunc`` in the coordinates of the algebra's basis.
Subspaces are stored in canonical reduced row echelon form, so equality of
subspaces is equality of their ``rows``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    InconsistentStructure,
    JacobiError,
    NilradicalUnverified,
    NotAnIdeal,
)
from .exact import MatK, Poly, RatFunc, VarId, matk_kernel, matk_rref, rank_q
from .exact.ratfunc import ONE, ZERO

Vector = Tuple[RatFunc, ...]


# -- vector helpers -----------------------------------------------------------

def vzero(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vector) -> Vector:
    c = RatFunc.coerce(c)
    if c.is_zero:
        return vzero(len(u))
    return tuple(c * a if a else a for a in u)


def vcomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        c = RatFunc.coerce(c)
        if c.is_zero:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] = out[k] + c * a
    return tuple(out)


def is_zero_vec(u: Vector) -> bool:
    return all(a.is_zero for a in u)


def as_vector(values, n: Optional[int] = None) -> Vector:
    v = tuple(RatFunc.coerce(x) for x in values)
    if n is not None and len(v) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(v)}")
    return v


# -- the algebra --------------------------------------------------------------

class LieAlgebra:
    """Finite-dimensional Lie algebra over K = Q(params).

    ``consts`` maps pairs ``(i, j)`` with ``i < j`` to ``{k: c_ij^k}``; omitted
    pairs bracket to zero.  The Jacobi identity is checked symbolically unless
    ``check=False``.
    """

    def __init__(self, dim: int, labels: Sequence[str], consts: Mapping, params: Sequence[VarId] = (),
                 *, name: Optional[str] = None, meta: Optional[dict] = None, check: bool = True):
        if dim < 0 or len(labels) != dim:
            raise DimensionMismatch("labels must match the dimension")
        self.dim = dim
        self.labels = tuple(labels)
        self.name = name
        self.meta = dict(meta or {})
        table = [[None] * dim for _ in range(dim)]
        z = vzero(dim)
        for i in range(dim):
            for j in range(dim):
                table[i][j] = z
        for (i, j), res in consts.items():
            if not (0 <= i < dim and 0 <= j < dim) or i == j:
                raise DimensionMismatch(f"bad bracket index pair {(i, j)}")
            vec = [ZERO] * dim
            items = res.items() if isinstance(res, Mapping) else enumerate(res)
            for k, c in items:
                vec[int(k)] = RatFunc.coerce(c)
            vec = tuple(vec)
            if i > j:
                i, j, vec = j, i, tuple(-a for a in vec)
            table[i][j] = vec
            table[j][i] = tuple(-a for a in vec)
        self._table = table
        found = set()
        for row in table:
            for vec in row:
                for a in vec:
                    if a:
                        found |= a.variables()
        self.params = tuple(sorted(set(params) | found, key=lambda v: v.index))
        self._kirillov = None
        if check and not jacobi_holds(self):
            raise JacobiError(f"structure constants of {name or 'algebra'} violate the Jacobi identity")

    # structure constants
    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def consts(self) -> Dict[Tuple[int, int], Dict[int, RatFunc]]:
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vec = self._table[i][j]
                nz = {k: c for k, c in enumerate(vec) if c}
                if nz:
                    out[(i, j)] = nz
        return out

    def bracket(self, u: Vector, v: Vector) -> Vector:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch(f"vectors must have length {n}")
        out = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(v):
                if not b or i == j:
                    continue
                vec = row[j]
                ab = None
                for k, c in enumerate(vec):
                    if c:
                        if ab is None:
                            ab = a * b
                        out[k] = out[k] + ab * c
        return tuple(out)

    def is_abelian(self) -> bool:
        return all(is_zero_vec(self._table[i][j]) for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_rational(self) -> bool:
        return not self.params

    def ad_matrix(self, u: Vector) -> List[List[RatFunc]]:
        """Matrix of ad u: column j holds the coordinates of [u, e_j]."""
        n = self.dim
        cols = [self.bracket(u, unit(n, j)) for j in range(n)]
        return [[cols[j][k] for j in range(n)] for k in range(n)]

    def label_of(self, v: VarId) -> str:
        if v.is_param:
            return f"t{v.index}"
        if v.index < self.dim:
            return self.labels[v.index]
        return f"x{v.index + 1}"

    def __repr__(self):
        return f"LieAlgebra({self.name or 'g'}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.labels == other.labels
                and self._table == other._table and self.params == other.params)

    def __hash__(self):
        return hash((self.dim, self.labels))


def jacobi_holds(g: LieAlgebra) -> bool:
    n = g.dim
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = unit(n, i), unit(n, j), unit(n, k)
        s = vadd(vadd(g.bracket(g.bracket(ei, ej), ek), g.bracket(g.bracket(ej, ek), ei)),
                 g.bracket(g.bracket(ek, ei), ej))
        if not is_zero_vec(s):
            return False
    return True


def bracket(g: LieAlgebra, u, v) -> Vector:
    return g.bracket(as_vector(u, g.dim), as_vector(v, g.dim))


# -- subspaces ----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Span of ``rows`` inside ``parent``; rows are in reduced row echelon form."""

    parent: LieAlgebra = field(compare=False, repr=False)
    rows: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, parent: LieAlgebra, vectors: Sequence[Vector]) -> "Subspace":
        vecs = [v for v in vectors if not is_zero_vec(v)]
        if not vecs:
            return cls(parent, (), ())
        rows, piv = matk_rref(MatK(vecs, parent.dim))
        return cls(parent, tuple(rows), tuple(piv))

    @classmethod
    def whole(cls, parent: LieAlgebra) -> "Subspace":
        return cls(parent, tuple(unit(parent.dim, i) for i in range(parent.dim)), tuple(range(parent.dim)))

    @classmethod
    def zero(cls, parent: LieAlgebra) -> "Subspace":
        return cls(parent, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> Tuple[Vector, ...]:
        return self.rows

    def reduce(self, v: Vector) -> Vector:
        """v minus its component along the span, w.r.t. the standard complement."""
        out = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        out[k] = out[k] - c * a
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        return is_zero_vec(self.reduce(v))

    def coords(self, v: Vector) -> Optional[Tuple[RatFunc, ...]]:
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def complement_indices(self) -> List[int]:
        piv = set(self.pivots)
        return [i for i in range(self.parent.dim) if i not in piv]

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.parent, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def _solve_kernel(columns: List[List[RatFunc]], nvars: int) -> List[Vector]:
    """Kernel of the linear map whose i-th column lists the images of the i-th unknown."""
    rows = []
    if columns:
        neq = len(columns[0])
        for r in range(neq):
            row = tuple(columns[i][r] for i in range(nvars))
            if any(row):
                rows.append(row)
    if not rows:
        return [unit(nvars, i) for i in range(nvars)]
    return matk_kernel(MatK(rows, nvars))


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span(g, [g.bracket(u, v) for u in a.rows for v in b.rows])


def is_ideal(g: LieAlgebra, sub: Subspace) -> bool:
    n = g.dim
    return all(sub.contains(g.bracket(unit(n, i), v)) for i in range(n) for v in sub.rows)


def is_subalgebra(g: LieAlgebra, sub: Subspace) -> bool:
    return all(sub.contains(g.bracket(u, v)) for u, v in combinations(sub.rows, 2))


def centralizer_in(g: LieAlgebra, target: Subspace, within: Optional[Subspace] = None,
                   modulo: Optional[Subspace] = None) -> Subspace:
    """{u in within : [u, target] lies in modulo} (modulo defaults to 0)."""
    n = g.dim
    basis = list(within.rows) if within is not None else [unit(n, i) for i in range(n)]
    if not basis:
        return Subspace.zero(g)
    cols = []
    for u in basis:
        col = []
        for t in target.rows:
            w = g.bracket(u, t)
            if modulo is not None:
                w = modulo.reduce(w)
            col.extend(w)
        cols.append(col)
    if not target.rows:
        return Subspace.span(g, basis)
    ker = _solve_kernel(cols, len(basis))
    return Subspace.span(g, [vcomb(k, basis, n) for k in ker])


def center(g: LieAlgebra) -> Subspace:
    return centralizer_in(g, Subspace.whole(g))


def derived_algebra(g: LieAlgebra) -> Subspace:
    w = Subspace.whole(g)
    return bracket_span(g, w, w)


def derived_series(g: LieAlgebra) -> List[Subspace]:
    series = [Subspace.whole(g)]
    while True:
        nxt = bracket_span(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def lower_central_series(g: LieAlgebra) -> List[Subspace]:
    whole = Subspace.whole(g)
    series = [whole]
    while True:
        nxt = bracket_span(g, whole, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def upper_central_series(g: LieAlgebra) -> List[Subspace]:
    """[Z_1 = center, Z_2, ...] until stabilisation."""
    whole = Subspace.whole(g)
    series = [center(g)]
    while True:
        nxt = centralizer_in(g, whole, modulo=series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = [ZERO] * p
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if not a:
                continue
            Bk = B[k]
            for j in range(p):
                b = Bk[j]
                if b:
                    row[j] = row[j] + a * b
        out.append(row)
    return out


def trace_of_product(A, B) -> RatFunc:
    t = ZERO
    for i in range(len(A)):
        for k in range(len(B)):
            a, b = A[i][k], B[k][i]
            if a and b:
                t = t + a * b
    return t


def killing_form(g: LieAlgebra) -> List[List[RatFunc]]:
    n = g.dim
    ads = [g.ad_matrix(unit(n, i)) for i in range(n)]
    B = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            B[i][j] = B[j][i] = trace_of_product(ads[i], ads[j])
    return B


def solvable_radical(g: LieAlgebra) -> Subspace:
    """Maximal solvable ideal: the Killing-orthogonal complement of [g, g]."""
    if is_solvable(g):
        return Subspace.whole(g)
    n = g.dim
    B = killing_form(g)
    d = derived_algebra(g)
    cols = []
    for i in range(n):
        cols.append([sum((B[i][k] * v[k] for k in range(n) if v[k] and B[i][k]), ZERO) for v in d.rows])
    ker = _solve_kernel(cols, n)
    rad = Subspace.span(g, ker)
    sub = subalgebra(g, rad) if rad.dim else None
    if not is_ideal(g, rad) or (sub is not None and not is_solvable(sub)):
        raise InconsistentStructure("Killing-orthogonal complement of [g,g] is not a solvable ideal")
    return rad


def subalgebra(g: LieAlgebra, sub: Subspace, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """The subalgebra spanned by ``sub`` in the basis ``sub.rows``."""
    m = sub.dim
    consts = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = g.bracket(sub.rows[a], sub.rows[b])
            c = sub.coords(w)
            if c is None:
                raise NotAnIdeal("subspace is not closed under the bracket")
            nz = {k: x for k, x in enumerate(c) if x}
            if nz:
                consts[(a, b)] = nz
    if labels is None:
        labels = [f"b{k + 1}" for k in range(m)]
    return LieAlgebra(m, labels, consts, check=False)


def lift_vector(sub: Subspace, coeffs: Sequence[RatFunc]) -> Vector:
    """Map coordinates w.r.t. ``sub.rows`` back into the parent."""
    return vcomb(coeffs, sub.rows, sub.parent.dim)


def quotient(g: LieAlgebra, ideal: Subspace):
    """(g/ideal, projection) with the quotient basis the standard complement."""
    if not is_ideal(g, ideal):
        raise NotAnIdeal("quotient requires an ideal")
    comp = ideal.complement_indices()
    n = g.dim

    def project(v: Vector) -> Vector:
        r = ideal.reduce(v)
        return tuple(r[i] for i in comp)

    consts = {}
    for a, i in enumerate(comp):
        for b in range(a + 1, len(comp)):
            j = comp[b]
            w = project(g.bracket(unit(n, i), unit(n, j)))
            nz = {k: x for k, x in enumerate(w) if x}
            if nz:
                consts[(a, b)] = nz
    q = LieAlgebra(len(comp), [g.labels[i] for i in comp], consts, g.params, check=True)
    return q, project


def stabilizer(g: LieAlgebra, xi) -> Subspace:
    """Kernel of u -> xi([u, .]) for a covector xi given in coordinates."""
    xi = as_vector(xi, g.dim)
    n = g.dim
    cols = []
    for i in range(n):
        col = []
        for j in range(n):
            vec = g.bracket_basis(i, j)
            col.append(sum((xi[k] * c for k, c in enumerate(vec) if c and xi[k]), ZERO))
        cols.append(col)
    return Subspace.span(g, _solve_kernel(cols, n))


# -- nilradical ---------------------------------------------------------------

def random_param_point(params: Sequence[VarId], rng: random.Random, bound: int = 50) -> Dict[VarId, int]:
    return {p: rng.randint(-bound, bound) or 1 for p in params}


def _eval_matrix(M, point):
    return [[x.evaluate(point) for x in row] for row in M]


def _is_nilpotent_numeric(M) -> bool:
    n = len(M)
    from gmpy2 import mpq

    P = [[mpq(x) for x in row] for row in M]
    R = P
    for _ in range(n - 1):
        R = [[sum((R[i][k] * P[k][j] for k in range(n) if R[i][k] and P[k][j]), mpq(0))
              for j in range(n)] for i in range(n)]
    return all(not x for row in R for x in row)


def nilradical(g: LieAlgebra, *, rng: Optional[random.Random] = None) -> Subspace:
    """Maximal nilpotent ideal.

    Inside the radical r every weight of r on g vanishes on [g, r], so only a
    complement C of [g, r] in r needs testing.  For x in span(C), ad x is
    nilpotent iff tr(ad x . W) = 0 for all products W of the commuting
    diagonal parts of ad C (power sums of the weights), which is linear in x.
    The result is verified a posteriori.
    """
    rng = rng or random.Random(0)
    n = g.dim
    r = solvable_radical(g)
    if r.dim == 0:
        return r
    gr = bracket_span(g, Subspace.whole(g), r)
    comp = []
    acc = gr
    for v in r.rows:
        red = acc.reduce(v)
        if not is_zero_vec(red):
            comp.append(red)
            acc = Subspace.span(g, list(acc.rows) + [red])
    if comp:
        mats = [g.ad_matrix(c) for c in comp]
        s = len(mats)
        identity = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        words = [(identity, 0)]
        frontier = [(identity, 0)]
        for _ in range(n - 1):
            nxt = []
            for W, last in frontier:
                for j in range(last, s):
                    nxt.append((matmul(mats[j], W), j))
            words.extend(nxt)
            frontier = nxt
        cols = [[trace_of_product(mats[j], W) for W, _ in words] for j in range(s)]
        ker = _solve_kernel(cols, s)
        extra = [vcomb(k, comp, n) for k in ker]
    else:
        extra = []
    nil = Subspace.span(g, list(gr.rows) + extra)
    _verify_nilradical(g, r, nil, rng)
    return nil


def _verify_nilradical(g: LieAlgebra, r: Subspace, nil: Subspace, rng: random.Random) -> None:
    if not is_ideal(g, nil):
        raise NilradicalUnverified("computed nilradical is not an ideal")
    if nil.dim and not is_nilpotent(subalgebra(g, nil)):
        raise NilradicalUnverified("computed nilradical is not nilpotent")
    comp = []
    acc = nil
    for v in r.rows:
        red = acc.reduce(v)
        if not is_zero_vec(red):
            comp.append(red)
            acc = Subspace.span(g, list(acc.rows) + [red])
    if not comp:
        return
    for _ in range(5):
        point = random_param_point(g.params, rng)
        try:
            tests = list(comp)
            tests.append(vcomb([rng.randint(1, 9) for _ in comp], comp, g.dim))
            for c in tests:
                if _is_nilpotent_numeric(_eval_matrix(g.ad_matrix(c), point)):
                    raise NilradicalUnverified("a complement direction of the nilradical acts nilpotently")
            return
        except ZeroDivisionError:
            continue
    raise NilradicalUnverified("could not find a regular parameter point for verification")


# -- Heisenberg recognition -----------------------------------------------------

@dataclass
class HeisenbergBasis:
    x: List[Vector]
    y: List[Vector]
    z: Vector

    @property
    def k(self) -> int:
        return len(self.x)


def darboux(vectors: Sequence[Vector], form) -> Tuple[List[Vector], List[Vector], List[Vector]]:
    """Symplectic Gram-Schmidt for an alternating form over K.

    Returns ``(xs, ys, radical)`` with form(x_i, y_j) = delta_ij and all other
    pairings zero.  Pivoting takes the first vector with a nonzero pairing,
    scanning in the given order.
    """
    work = list(vectors)
    xs, ys, rad = [], [], []
    while work:
        u = work.pop(0)
        partner = None
        for idx, v in enumerate(work):
            b = form(u, v)
            if b:
                partner = idx
                break
        if partner is None:
            rad.append(u)
            continue
        v = work.pop(partner)
        v = vscale(b.inverse(), v)
        xs.append(u)
        ys.append(v)
        new = []
        for w in work:
            bw_y = form(w, v)
            bw_x = form(w, u)
            if bw_y:
                w = vsub(w, vscale(bw_y, u))
            if bw_x:
                w = vadd(w, vscale(bw_x, v))
            new.append(w)
        work = new
        # radical vectors found earlier stay orthogonal to the new pair
    return xs, ys, rad


def heisenberg_recognize(n_alg: LieAlgebra) -> Optional[HeisenbergBasis]:
    d = n_alg.dim
    if d == 0 or d % 2 == 0:
        return None
    if d == 1:
        return HeisenbergBasis([], [], unit(1, 0))
    c = center(n_alg)
    if c.dim != 1:
        return None
    if derived_algebra(n_alg) != c:
        return None
    z = c.rows[0]
    zp = c.pivots[0]

    def form(u, v):
        w = n_alg.bracket(u, v)
        return w[zp] / z[zp]

    vs = [unit(d, i) for i in c.complement_indices()]
    xs, ys, rad = darboux(vs, form)
    if rad:
        return None
    hb = HeisenbergBasis(xs, ys, z)
    if not verify_heisenberg(n_alg, hb):
        raise InconsistentStructure("Darboux basis failed the Heisenberg relations")
    return hb


def verify_heisenberg(n_alg: LieAlgebra, hb: HeisenbergBasis) -> bool:
    d = n_alg.dim
    zero = vzero(d)
    k = hb.k
    for i in range(k):
        for j in range(k):
            if n_alg.bracket(hb.x[i], hb.x[j]) != zero or n_alg.bracket(hb.y[i], hb.y[j]) != zero:
                return False
            want = hb.z if i == j else zero
            if n_alg.bracket(hb.x[i], hb.y[j]) != want:
                return False
    for v in hb.x + hb.y + [hb.z]:
        if n_alg.bracket(v, hb.z) != zero:
            return False
    return True


def commutative_characteristic_ideal(g: LieAlgebra, n: Subspace) -> Optional[Subspace]:
    """A commutative ideal h of g inside n with dim h > 1 or [g, h] != 0.

    Candidates are scanned in a fixed order: the center of n, then the centers
    of successive terms of the upper central series of n.  ``None`` means every
    candidate is one-dimensional and central, which forces n to be Heisenberg
    with central [n, n].
    """
    if n.dim == 0:
        return None
    n_alg = subalgebra(g, n)
    whole = Subspace.whole(g)
    for term in upper_central_series(n_alg):
        t_alg = subalgebra(n_alg, term)
        zc = center(t_alg)
        cand_n = [lift_vector(term, v) for v in zc.rows]
        cand = Subspace.span(g, [lift_vector(n, v) for v in cand_n])
        if cand.dim == 0:
            continue
        if not is_ideal(g, cand):
            continue
        if cand.dim > 1 or bracket_span(g, whole, cand).dim > 0:
            return cand
    hb = heisenberg_recognize(n_alg)
    if hb is None:
        raise InconsistentStructure("no commutative characteristic ideal found but n is not Heisenberg")
    zg = lift_vector(n, hb.z)
    if bracket_span(g, whole, Subspace.span(g, [zg])).dim:
        raise InconsistentStructure("Heisenberg center is not central in g")
    return None


def generic_rank_numeric(M_eval) -> int:
    return rank_q(M_eval)


# -- bases --------------------------------------------------------------------

class BasisCoords:
    """Coordinates with respect to linearly independent vectors over K."""

    def __init__(self, vectors: Sequence[Vector], n: int):
        self.vectors = [tuple(v) for v in vectors]
        m = len(self.vectors)
        self.n, self.m = n, m
        if m == 0:
            self.R, self.T, self.pivots = [], [], []
            return
        aug = [tuple(v) + tuple(ONE if i == j else ZERO for j in range(m)) for i, v in enumerate(self.vectors)]
        rows, piv = matk_rref(MatK(aug, n + m))
        if len(piv) != m or any(p >= n for p in piv):
            raise InconsistentStructure("basis vectors are linearly dependent")
        self.R = [r[:n] for r in rows]
        self.T = [r[n:] for r in rows]
        self.pivots = list(piv)

    def coords(self, v: Vector) -> Tuple[RatFunc, ...]:
        out = [ZERO] * self.m
        resid = list(v)
        for k, p in enumerate(self.pivots):
            c = resid[p]
            if not c:
                continue
            for j, a in enumerate(self.R[k]):
                if a:
                    resid[j] = resid[j] - c * a
            for i, t in enumerate(self.T[k]):
                if t:
                    out[i] = out[i] + c * t
        if any(resid):
            raise InconsistentStructure("vector is not in the span of the basis")
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        try:
            self.coords(v)
            return True
        except InconsistentStructure:
            return False


def change_basis(g: LieAlgebra, basis: Sequence[Vector], labels: Optional[Sequence[str]] = None,
                 *, check: bool = False) -> LieAlgebra:
    """The algebra g written in the basis ``basis`` (a full-rank list of vectors)."""
    bc = BasisCoords(basis, g.dim)
    if bc.m != g.dim:
        raise DimensionMismatch("change of basis needs dim g vectors")
    consts = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            c = bc.coords(g.bracket(basis[i], basis[j]))
            nz = {k: x for k, x in enumerate(c) if x}
            if nz:
                consts[(i, j)] = nz
    labels = labels or [f"b{i + 1}" for i in range(g.dim)]
    return LieAlgebra(g.dim, labels, consts, g.params, name=g.name, check=check)

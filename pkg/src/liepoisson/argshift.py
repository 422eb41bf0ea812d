"""Invariants of classical matrix algebras and argument-shift families.

Coordinates are identified with matrices through the trace form: the covector
with coordinates x (x_k = xi(b_k) on the matrix basis b) corresponds to the
matrix M(x) in g with tr(M(x) b_k) = x_k for every k.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from gmpy2 import mpq

from .errors import NotVerifiedInvariant, RetryBudgetExhausted, Unsupported
from .exact import Poly, coord, rank_q
from .liealg import LieAlgebra, stabilizer, subalgebra
from .poisson import (
    CommutativityResult,
    PolyFamily,
    commutativity_check,
    eval_matrix,
    index,
    independence_samples,
    jacobian,
    kirillov_matrix,
    l_value,
    poisson_bracket,
)

SOURCES = ("builtin_classical", "user_supplied", "abelian_trivial")


@dataclass
class InvariantSet:
    algebra: LieAlgebra
    generators: List[Poly]
    source: str

    def __post_init__(self):
        for F in self.generators:
            if not is_invariant(self.algebra, F):
                raise NotVerifiedInvariant(f"{F.to_str(self.algebra.label_of)} is not a Casimir")


def is_invariant(g: LieAlgebra, F: Poly) -> bool:
    return all(poisson_bracket(g, F, Poly.var(coord(i))).is_zero for i in range(g.dim))


# -- generic matrix and its characteristic polynomial --------------------------

def _solve_q(A: List[List[mpq]], B: List[List[mpq]]) -> List[List[mpq]]:
    """Solve A X = B for square invertible A over Q."""
    n = len(A)
    M = [list(A[i]) + list(B[i]) for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c])
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def generic_matrix(g: LieAlgebra) -> List[List[Poly]]:
    mats = g.meta.get("matrices")
    if mats is None:
        raise Unsupported(f"{g.name or 'algebra'} carries no matrix realisation")
    d = len(mats)
    size = len(mats[0])
    gram = [[sum((mats[k][i][j] * mats[l][j][i] for i in range(size) for j in range(size)), mpq(0))
             for l in range(d)] for k in range(d)]
    ident = [[mpq(1) if i == j else mpq(0) for j in range(d)] for i in range(d)]
    Ginv = _solve_q(gram, ident)
    # m_k = sum_l Ginv[k][l] x_l
    m = [sum((Poly.var(coord(l)).scale(Ginv[k][l]) for l in range(d) if Ginv[k][l]), Poly()) for k in range(d)]
    M = [[Poly() for _ in range(size)] for _ in range(size)]
    for k in range(d):
        for i in range(size):
            for j in range(size):
                if mats[k][i][j]:
                    M[i][j] = M[i][j] + m[k].scale(mats[k][i][j])
    return M


def _pmatmul(A, B):
    n = len(A)
    out = [[Poly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if a.is_zero:
                continue
            for j in range(n):
                b = B[k][j]
                if b:
                    out[i][j] = out[i][j] + a * b
    return out


def char_coefficients(M: List[List[Poly]]) -> List[Poly]:
    """Coefficients c_0..c_n of det(lambda I - M) by Faddeev-LeVerrier."""
    n = len(M)
    c = [Poly() for _ in range(n + 1)]
    c[n] = Poly.const(1)
    Mk = [[Poly() for _ in range(n)] for _ in range(n)]
    for k in range(1, n + 1):
        prod = _pmatmul(M, Mk)
        Mk = [[prod[i][j] + (c[n - k + 1] if i == j else Poly()) for j in range(n)] for i in range(n)]
        AM = _pmatmul(M, Mk)
        tr = sum((AM[i][i] for i in range(n)), Poly())
        c[n - k] = tr.scale(mpq(-1, k))
    return c


def pfaffian(A: List[List[Poly]]) -> Poly:
    n = len(A)
    if n == 0:
        return Poly.const(1)
    if n % 2:
        return Poly()
    total = Poly()
    rest = list(range(1, n))
    for idx, j in enumerate(rest):
        a = A[0][j]
        if a.is_zero:
            continue
        keep = [k for k in rest if k != j]
        sub = [[A[r][s] for s in keep] for r in keep]
        term = a * pfaffian(sub)
        total = total + term if idx % 2 == 0 else total - term
    return total


def _normalize(p: Poly) -> Poly:
    p = p.primitive()
    return -p if p.leading_coeff() < 0 else p


def classical_invariants(g_or_name, n: Optional[int] = None) -> InvariantSet:
    """Free generators of the invariant polynomials of gl, sl, so or sp."""
    if isinstance(g_or_name, LieAlgebra):
        g = g_or_name
    else:
        from .catalog import catalog

        g = catalog(g_or_name, n)
    kind = g.meta.get("classical")
    if kind is None:
        raise Unsupported(f"{g.name or 'algebra'} is not a built-in classical algebra")
    M = generic_matrix(g)
    size = len(M)
    coeffs = char_coefficients(M)
    # coefficient of lambda^(size-d) has degree d
    by_deg = {d: coeffs[size - d] for d in range(1, size + 1)}
    if kind == "gl":
        degs = list(range(1, size + 1))
    elif kind == "sl":
        degs = list(range(2, size + 1))
    else:
        degs = list(range(2, size + 1, 2))
    gens = []
    for d in degs:
        if kind == "so" and size % 2 == 0 and d == size:
            gens.append(_normalize(pfaffian(M)))
        else:
            gens.append(_normalize(by_deg[d]))
    if any(F.is_zero for F in gens):
        raise NotVerifiedInvariant("a generator vanished identically")
    return InvariantSet(g, gens, "builtin_classical")


def abelian_invariants(g: LieAlgebra) -> InvariantSet:
    return InvariantSet(g, [Poly.var(coord(i)) for i in range(g.dim)], "abelian_trivial")


def user_invariants(g: LieAlgebra, generators: Sequence[Poly]) -> InvariantSet:
    return InvariantSet(g, list(generators), "user_supplied")


def invariants_for(g: LieAlgebra) -> Optional[InvariantSet]:
    if g.meta.get("invariants") is not None:
        return user_invariants(g, g.meta["invariants"])
    if g.meta.get("classical"):
        return classical_invariants(g)
    if g.is_abelian():
        return abelian_invariants(g)
    return None


# -- shifts -------------------------------------------------------------------

@dataclass
class ShiftFamily:
    base: InvariantSet
    a: List[mpq]
    members: List[Poly]
    commutativity: Optional[CommutativityResult] = None
    origin: List[tuple] = field(default_factory=list)

    def as_family(self) -> PolyFamily:
        tags = ["invariant" if k == 0 else "argshift" for _, k in self.origin]
        return PolyFamily(list(self.members), tags)


def directional(F: Poly, a: Sequence, n: int) -> Poly:
    out = Poly()
    for i in range(n):
        if a[i]:
            d = F.diff(coord(i))
            if d:
                out = out + d.scale(a[i])
    return out


def shift_family(inv: InvariantSet, a: Sequence, *, check: bool = True) -> ShiftFamily:
    """t-coefficients of F(xi + t a) for every generator F; constants dropped."""
    n = inv.algebra.dim
    a = [mpq(x) for x in a]
    if len(a) != n:
        from .errors import DimensionMismatch

        raise DimensionMismatch(f"shift vector needs {n} entries")
    members, origin = [], []
    for gi, F in enumerate(inv.generators):
        cur = F
        k = 0
        while cur and not cur.is_constant:
            members.append(cur.scale(mpq(1, math.factorial(k))))
            origin.append((gi, k))
            k += 1
            cur = directional(cur, a, n)
    fam = ShiftFamily(inv, a, members, origin=origin)
    if check:
        fam.commutativity = commutativity_check(members, inv.algebra)
    return fam


def independent_subset(members: Sequence[Poly], g: LieAlgebra, point) -> List[int]:
    """Greedy indices of members with independent differentials at ``point``."""
    J = eval_matrix(jacobian(members, g.dim), point)
    chosen, rows = [], []
    for i, row in enumerate(J):
        if rank_q(rows + [row]) > len(rows):
            rows.append(row)
            chosen.append(i)
    return chosen


@dataclass
class DualCompletion:
    family: ShiftFamily
    target_l: int
    rank: int
    samples: List[int]
    draws: int


def complete_on_dual(g: LieAlgebra, *, seed: int = 0, rng: Optional[random.Random] = None,
                     inv: Optional[InvariantSet] = None, budget: int = 5, shift_range: int = 20,
                     trials: int = 8, coeff_range: int = 10 ** 4) -> DualCompletion:
    rng = rng or random.Random(seed)
    inv = inv or invariants_for(g)
    if inv is None:
        raise Unsupported(f"no invariants available for {g.name or 'algebra'}")
    target = l_value(g, rng=random.Random(rng.getrandbits(64))).l
    best = -1
    width = shift_range
    for draw in range(1, budget + 1):
        a = [rng.randint(-width, width) for _ in range(g.dim)]
        fam = shift_family(inv, a)
        if not fam.commutativity.passed:
            raise NotVerifiedInvariant("shifted invariants failed to commute")
        res = independence_samples(fam.members, g, trials=trials, coeff_range=coeff_range,
                                   rng=random.Random(rng.getrandbits(64)))
        best = max(best, res.rank)
        if res.rank == target:
            if len(fam.members) > target:
                pt = {coord(i): rng.randint(-coeff_range, coeff_range) for i in range(g.dim)}
                keep = independent_subset(fam.members, g, pt)
                if len(keep) == target:
                    fam.members = [fam.members[i] for i in keep]
                    fam.origin = [fam.origin[i] for i in keep]
            return DualCompletion(fam, target, res.rank, res.samples, draw)
        width *= 2
    raise RetryBudgetExhausted(f"shift search reached rank {best} < {target}", best, target)


# -- orbit criterion ----------------------------------------------------------

@dataclass
class OrbitReport:
    xi: List[mpq]
    orbit_dim: int
    ind_g: int
    ind_stabilizer: int
    stabilizer_dim: int
    dim_v: int
    a: Optional[List[mpq]]
    draws: int

    @property
    def index_matches(self) -> bool:
        return self.ind_g == self.ind_stabilizer

    @property
    def found(self) -> bool:
        return 2 * self.dim_v == self.orbit_dim

    @property
    def verdict(self) -> str:
        return "complete" if self.found and self.index_matches else "incomplete"


def orbit_criterion(g: LieAlgebra, xi: Sequence, *, seed: int = 0, rng: Optional[random.Random] = None,
                    inv: Optional[InvariantSet] = None, budget: int = 10, shift_range: int = 20) -> OrbitReport:
    rng = rng or random.Random(seed)
    if g.params:
        raise Unsupported("orbit criterion needs an algebra over Q")
    inv = inv or invariants_for(g)
    if inv is None:
        raise Unsupported(f"no invariants available for {g.name or 'algebra'}")
    n = g.dim
    xi = [mpq(x) for x in xi]
    if len(xi) != n:
        from .errors import DimensionMismatch

        raise DimensionMismatch(f"xi needs {n} entries")
    point = {coord(i): xi[i] for i in range(n)}
    Kxi = eval_matrix(kirillov_matrix(g), point)
    orbit_dim = rank_q(Kxi)
    stab = stabilizer(g, xi)
    g_xi = subalgebra(g, stab)
    ind_xi = index(g_xi, rng=random.Random(rng.getrandbits(64))) if stab.dim else 0
    ind_g = index(g, rng=random.Random(rng.getrandbits(64)))
    best, best_a, draws = -1, None, 0
    for draws in range(1, budget + 1):
        a = [rng.randint(-shift_range, shift_range) for _ in range(n)]
        fam = shift_family(inv, a, check=False)
        grads = eval_matrix(jacobian(fam.members, n), point) if fam.members else []
        rows = [[sum((row[i] * Kxi[i][j] for i in range(n) if row[i]), mpq(0)) for j in range(n)] for row in grads]
        dv = rank_q(rows) if rows else 0
        if dv > best:
            best, best_a = dv, [mpq(x) for x in a]
        if 2 * best == orbit_dim:
            break
    return OrbitReport(xi, orbit_dim, ind_g, ind_xi, stab.dim, best, best_a, draws)

"""Lie-Poisson bracket on S(g), index, independence ranks and l(X) accounting.

For algebras whose structure constants have parameter denominators the bracket
is scaled by ``bracket_scale(g)`` (the lcm D of those denominators) so that it
stays polynomial.  D is a nonzero element of K, so vanishing of a bracket, and
every rank below, is unaffected.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .errors import AllPointsSingular, ParityViolation
from .exact import Poly, bareiss_rank, coord, rank_q
from .exact.linalg import poly_lcm
from .liealg import LieAlgebra

PROVENANCE = ("argshift", "heis_lift", "com_pullback", "h_basis", "vplus_basis", "invariant", "coordinate", "user")


@dataclass
class PolyFamily:
    members: List[Poly]
    provenance: List[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.provenance:
            self.provenance = ["user"] * len(self.members)
        if len(self.provenance) != len(self.members):
            raise ValueError("one provenance tag per member")
        if any(m.is_zero for m in self.members):
            raise ValueError("family members must be nonzero")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def extend(self, other: "PolyFamily") -> "PolyFamily":
        return PolyFamily(self.members + other.members, self.provenance + other.provenance)

    def strings(self, g: LieAlgebra) -> List[str]:
        return [m.to_str(g.label_of) for m in self.members]


# -- bracket ------------------------------------------------------------------

def bracket_scale(g: LieAlgebra) -> Poly:
    den = Poly.const(1)
    for vec in g.consts().values():
        for c in vec.values():
            if not c.den.is_constant:
                den = poly_lcm(den, c.den)
    return den


def _kirillov(g: LieAlgebra):
    if g._kirillov is None:
        D = bracket_scale(g)
        n = g.dim
        K = [[Poly() for _ in range(n)] for _ in range(n)]
        for (i, j), vec in g.consts().items():
            e = Poly()
            for k, c in vec.items():
                coef = c.num * D.exquo(c.den) if not c.den.is_constant else c.num.scale(1 / c.den.constant_value()) * D
                e = e + coef * Poly.var(coord(k))
            K[i][j] = e
            K[j][i] = -e
        g._kirillov = K
    return g._kirillov


def kirillov_matrix(g: LieAlgebra) -> List[List[Poly]]:
    """Entry (i, j) is the linear polynomial {x_i, x_j} (times the bracket scale)."""
    return [list(r) for r in _kirillov(g)]


def poisson_bracket(g: LieAlgebra, p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        return Poly()
    K = _kirillov(g)
    n = g.dim
    dp = [p.diff(coord(i)) for i in range(n)]
    dq = [q.diff(coord(i)) for i in range(n)]
    out = Poly()
    for i in range(n):
        if dp[i].is_zero and dq[i].is_zero:
            continue
        Ki = K[i]
        for j in range(i + 1, n):
            e = Ki[j]
            if e.is_zero:
                continue
            t = Poly()
            if dp[i] and dq[j]:
                t = dp[i] * dq[j]
            if dp[j] and dq[i]:
                t = t - dp[j] * dq[i]
            if t:
                out = out + t * e
    return out


# -- sampling helpers ---------------------------------------------------------

def random_point(g: LieAlgebra, rng: random.Random, bound: int) -> Dict:
    pt = {coord(i): rng.randint(-bound, bound) for i in range(g.dim)}
    for t in g.params:
        pt[t] = rng.randint(-bound, bound)
    return pt


def eval_matrix(M: Sequence[Sequence[Poly]], point) -> List[List[mpq]]:
    return [[x.evaluate(point) if x else mpq(0) for x in row] for row in M]


# -- index ----------------------------------------------------------------------

@dataclass
class IndexReport:
    index: int
    sampled_rank: int
    symbolic_rank: Optional[int]

    @property
    def agree(self) -> bool:
        return self.symbolic_rank is None or self.symbolic_rank == self.sampled_rank


def index_report(g: LieAlgebra, *, trials: int = 8, coeff_range: int = 10 ** 4,
                 rng: Optional[random.Random] = None, symbolic_cutoff: int = 12) -> IndexReport:
    rng = rng or random.Random(0)
    K = _kirillov(g)
    sampled = 0
    for _ in range(trials):
        sampled = max(sampled, rank_q(eval_matrix(K, random_point(g, rng, coeff_range))))
        if sampled == g.dim - g.dim % 2:
            break
    symbolic = bareiss_rank(K) if g.dim <= symbolic_cutoff else None
    rank = symbolic if symbolic is not None else sampled
    return IndexReport(g.dim - rank, sampled, symbolic)


def index(g: LieAlgebra, **kw) -> int:
    return index_report(g, **kw).index


def sampled_index(g: LieAlgebra, *, trials: int = 8, coeff_range: int = 10 ** 4, seed: int = 0) -> int:
    return index_report(g, trials=trials, coeff_range=coeff_range, rng=random.Random(seed),
                        symbolic_cutoff=-1).index


def symbolic_index(g: LieAlgebra) -> int:
    return g.dim - bareiss_rank(_kirillov(g))


# -- l(X) ---------------------------------------------------------------------

@dataclass(frozen=True)
class LValue:
    dim_X: int
    invariant_degrees: int
    l: int


def point_on_slice(g: LieAlgebra, constraints, rng: random.Random, bound: int) -> Dict:
    """Random coordinates and parameters satisfying xi(c) = value for every constraint."""
    pt = random_point(g, rng, bound)
    if not constraints:
        return pt
    params = {t: pt[t] for t in g.params}
    rows = []
    for vec, value in constraints:
        rows.append([c.evaluate(params) for c in vec] + [value.evaluate(params)])
    n = g.dim
    # Gauss-Jordan on the constraint rows, then solve for pivot coordinates
    r = 0
    pivots = []
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if r < len(rows):
        raise ZeroDivisionError("constraints degenerate at the sampled parameter point")
    for k, c in enumerate(pivots):
        val = rows[k][n]
        for j in range(n):
            if j != c and j not in pivots and rows[k][j]:
                val -= rows[k][j] * pt[coord(j)]
        pt[coord(c)] = val
    return pt


def l_value(g: LieAlgebra, state=None, *, trials: int = 8, coeff_range: int = 10 ** 4,
            rng: Optional[random.Random] = None, symbolic_cutoff: int = 12) -> LValue:
    """l(X) = dim X - max orbit dimension / 2 on X = {xi : xi(c) = v for constraints}.

    Without constraints this is (dim g + ind g) / 2.
    """
    constraints = list(getattr(state, "constraints", []) or [])
    if state is not None:
        g = state.algebra
    if not constraints:
        ind = index(g, trials=trials, coeff_range=coeff_range, rng=rng, symbolic_cutoff=symbolic_cutoff)
        return _lvalue(g.dim, ind)
    rng = rng or random.Random(0)
    K = _kirillov(g)
    best = None
    for _ in range(max(trials, 1) * 4):
        try:
            pt = point_on_slice(g, constraints, rng, coeff_range)
        except ZeroDivisionError:
            continue
        rk = rank_q(eval_matrix(K, pt))
        best = rk if best is None else max(best, rk)
        if best == g.dim - g.dim % 2:
            break
    if best is None:
        raise AllPointsSingular("no regular point found on the constrained slice")
    dim_x = g.dim - len(constraints)
    return _lvalue(dim_x, dim_x - best)


def _lvalue(dim_x: int, inv: int) -> LValue:
    if (dim_x + inv) % 2:
        raise ParityViolation(f"dim X + tr.deg = {dim_x} + {inv} is odd")
    return LValue(dim_x, inv, (dim_x + inv) // 2)


# -- independence and commutativity --------------------------------------------

@dataclass
class IndependenceResult:
    rank: int
    samples: List[int]
    trials: int
    coeff_range: int


def jacobian(members: Sequence[Poly], n: int) -> List[List[Poly]]:
    return [[f.diff(coord(i)) for i in range(n)] for f in members]


def independence_samples(family, g: LieAlgebra, *, trials: int = 8, coeff_range: int = 10 ** 4,
                         rng: Optional[random.Random] = None) -> IndependenceResult:
    rng = rng or random.Random(0)
    members = list(family.members if isinstance(family, PolyFamily) else family)
    if not members:
        return IndependenceResult(0, [], trials, coeff_range)
    J = jacobian(members, g.dim)
    samples = []
    for _ in range(trials):
        pt = random_point(g, rng, coeff_range)
        for f in members:
            for v in f.variables():
                if v not in pt:
                    pt[v] = rng.randint(-coeff_range, coeff_range)
        try:
            samples.append(rank_q(eval_matrix(J, pt)))
        except ZeroDivisionError:
            continue
    if not samples:
        raise AllPointsSingular("every sample point was singular")
    return IndependenceResult(max(samples), samples, trials, coeff_range)


def independence_rank(family, g: LieAlgebra, **kw) -> int:
    return independence_samples(family, g, **kw).rank


@dataclass
class CommutativityResult:
    pairs_checked: int
    failures: List[Tuple[int, int, Poly]]

    @property
    def passed(self) -> bool:
        return not self.failures


def commutativity_check(family, g: LieAlgebra) -> CommutativityResult:
    members = list(family.members if isinstance(family, PolyFamily) else family)
    failures = []
    checked = 0
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            checked += 1
            b = poisson_bracket(g, members[i], members[j])
            if b:
                failures.append((i, j, b))
    return CommutativityResult(checked, failures)

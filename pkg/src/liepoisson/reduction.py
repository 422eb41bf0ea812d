"""Heisenberg and commutative-ideal reductions of a Poisson slice of g*.

A state is a Lie algebra over K together with a central character: central
vectors pinned to values in K.  Families on the reduced state are pulled back
to polynomials in the parent's coordinates, denominators cleared by the
minimal factor returned by exact substitution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .errors import (
    InconsistentStructure,
    NoDimensionDrop,
    NotAnIdeal,
    NotCommutativeIdeal,
    PreconditionFailed,
)
from .exact import MatK, Poly, RatFunc, VarId, coord, matk_kernel, param, poly_substitute
from .exact.linalg import poly_lcm
from .exact.ratfunc import ONE, ZERO
from .liealg import (
    BasisCoords,
    HeisenbergBasis,
    LieAlgebra,
    Subspace,
    Vector,
    bracket_span,
    center,
    change_basis,
    darboux,
    heisenberg_recognize,
    is_ideal,
    is_zero_vec,
    jacobi_holds,
    lift_vector,
    nilradical,
    subalgebra,
    unit,
    vadd,
    vcomb,
    vscale,
    vsub,
    vzero,
)
from .poisson import PolyFamily, bracket_scale, kirillov_matrix, poisson_bracket

Constraint = Tuple[Vector, RatFunc]


class ParamCounter:
    """Hands out fresh parameter indices for one run."""

    def __init__(self, start: int = 1):
        self.next = start

    def fresh(self) -> VarId:
        v = param(self.next)
        self.next += 1
        return v

    @classmethod
    def after(cls, g: LieAlgebra) -> "ParamCounter":
        return cls(max((p.index for p in g.params), default=0) + 1)


@dataclass
class ReductionState:
    algebra: LieAlgebra
    constraints: List[Constraint] = field(default_factory=list)
    trace: List[dict] = field(default_factory=list)
    counter: Optional[ParamCounter] = None

    def __post_init__(self):
        if self.counter is None:
            self.counter = ParamCounter.after(self.algebra)
        self.constraints = [(tuple(RatFunc.coerce(x) for x in v), RatFunc.coerce(val))
                            for v, val in self.constraints]
        z = center(self.algebra)
        for v, _ in self.constraints:
            if len(v) != self.algebra.dim:
                raise InconsistentStructure("constraint vector has the wrong length")
            if not z.contains(v):
                raise InconsistentStructure("constraints may only pin central elements")
        if self.constraints and Subspace.span(self.algebra, [v for v, _ in self.constraints]).dim != len(
                self.constraints):
            raise InconsistentStructure("constraint vectors must be linearly independent")

    @property
    def params(self) -> Tuple[VarId, ...]:
        ps = set(self.algebra.params)
        for v, val in self.constraints:
            ps |= val.variables()
            for c in v:
                ps |= c.variables()
        return tuple(sorted(ps, key=lambda p: p.index))

    def pinned_value(self, v: Vector) -> Optional[RatFunc]:
        """Value of the linear function v on the slice when v lies in the span of the pins."""
        if not self.constraints:
            return ZERO if is_zero_vec(v) else None
        bc = BasisCoords([c for c, _ in self.constraints], self.algebra.dim)
        try:
            coeffs = bc.coords(v)
        except InconsistentStructure:
            return None
        total = ZERO
        for a, (_, val) in zip(coeffs, self.constraints):
            if a:
                total = total + a * val
        return total

    def describe_pins(self) -> List[str]:
        g = self.algebra
        out = []
        for v, val in self.constraints:
            lhs = linear_poly(v)
            out.append(f"{lhs.to_str(g.label_of)} = {val.to_str(g.label_of)}")
        return out


# -- linear functions and substitutions -----------------------------------------

def linear_pair(v: Sequence[RatFunc]) -> Tuple[Poly, Poly]:
    """The linear function xi -> xi(v) as (numerator, parameter denominator)."""
    den = Poly.const(1)
    for c in v:
        if c and not c.den.is_constant:
            den = poly_lcm(den, c.den)
    num = Poly()
    for k, c in enumerate(v):
        if not c:
            continue
        if c.den.is_constant:
            coef = c.num.scale(1 / c.den.constant_value()) * den
        else:
            coef = c.num * den.exquo(c.den)
        num = num + coef * Poly.var(coord(k))
    return num, den


def linear_poly(v: Sequence[RatFunc]) -> Poly:
    return normalize(linear_pair(v)[0])


def normalize(p: Poly) -> Poly:
    if p.is_zero:
        return p
    p = p.primitive()
    return -p if p.leading_coeff() < 0 else p


def restrict_to_slice(p: Poly, state: ReductionState) -> Poly:
    """Eliminate one coordinate per pin so identities modulo the pins become exact."""
    if not state.constraints or p.is_zero:
        return p
    rows, piv = _pin_echelon(state)
    subst = {}
    n = state.algebra.dim
    for row, pc in zip(rows, piv):
        # x_pc = value - sum_{j != pc} row_j x_j   (row is normalised at pc)
        vec = [ZERO] * n
        for j in range(n):
            if j != pc and row[j]:
                vec[j] = -row[j]
        num, den = linear_pair(vec)
        val = row[n]
        num = num * val.den + val.num * den
        subst[coord(pc)] = (num, den * val.den)
    return poly_substitute(p, subst)[0]


def _pin_echelon(state: ReductionState):
    from .exact import matk_rref

    n = state.algebra.dim
    aug = [tuple(v) + (val,) for v, val in state.constraints]
    rows, piv = matk_rref(MatK(aug, n + 1))
    if any(p >= n for p in piv):
        raise InconsistentStructure("pins are inconsistent")
    return rows, piv


def pull_back(members: Sequence[Poly], subst: Dict[VarId, object]) -> List[Poly]:
    out = []
    for f in members:
        num, _ = poly_substitute(f, subst)
        out.append(normalize(num))
    return out


def basis_substitution(basis: Sequence[Vector]) -> Dict[VarId, Tuple[Poly, Poly]]:
    """Coordinate i of the new basis is the linear function xi -> xi(basis[i])."""
    return {coord(i): linear_pair(b) for i, b in enumerate(basis)}


# -- central characters -----------------------------------------------------------

def canonicalize_pins(state: ReductionState) -> ReductionState:
    """Rewrite pins so that at most one has a nonzero value."""
    cons = list(state.constraints)
    lead = next((i for i, (_, val) in enumerate(cons) if val), None)
    if lead is None:
        return state
    v0, val0 = cons[lead]
    new = []
    for i, (v, val) in enumerate(cons):
        if i != lead and val:
            v = vsub(v, vscale(val / val0, v0))
            val = ZERO
        new.append((v, val))
    if new == cons:
        return state
    return ReductionState(state.algebra, new, state.trace, state.counter)


@dataclass
class QuotientStep:
    parent: ReductionState
    quotient: ReductionState
    comp: List[int]

    def pull_back(self, family: PolyFamily) -> PolyFamily:
        mapping = {coord(a): Poly.var(coord(i)) for a, i in enumerate(self.comp)}
        return PolyFamily(pull_back(family.members, mapping), list(family.provenance))


def quotient_zero_pins(state: ReductionState) -> QuotientStep:
    g = state.algebra
    zero = [v for v, val in state.constraints if not val]
    if not zero:
        raise PreconditionFailed("no pin with value 0")
    ideal = Subspace.span(g, zero)
    comp = ideal.complement_indices()
    consts = {}
    for a, i in enumerate(comp):
        for b in range(a + 1, len(comp)):
            w = ideal.reduce(g.bracket_basis(i, comp[b]))
            nz = {k: w[j] for k, j in enumerate(comp) if w[j]}
            if nz:
                consts[(a, b)] = nz
    q = LieAlgebra(len(comp), [g.labels[i] for i in comp], consts, g.params, name=g.name, check=False)
    kept = []
    for v, val in state.constraints:
        if val:
            r = ideal.reduce(v)
            kept.append((tuple(r[i] for i in comp), val))
    new = ReductionState(q, kept, state.trace, state.counter)
    return QuotientStep(state, new, comp)


# -- Heisenberg reduction ----------------------------------------------------------

@dataclass
class HeisReduction:
    parent: ReductionState
    quotient: ReductionState
    basis: List[Vector]          # adapted basis x.., y.., z, c'.. of the parent, in parent coordinates
    adapted: LieAlgebra          # parent algebra written in the adapted basis
    k: int
    lifts: List[Poly]            # D * Z * L(c'_a) in adapted coordinates
    scale: Poly                  # D, bracket scale of the adapted algebra
    zeta: Optional[VarId]        # fresh parameter standing for the value of z, if z is not pinned
    z_pinned: bool
    has_w: bool
    cbar: List[List[Dict[int, RatFunc]]]
    kappa: List[List[RatFunc]]
    vplus: Subspace = None
    z: Vector = None

    @property
    def s(self) -> int:
        return self.adapted.dim - 2 * self.k - 1

    @property
    def z_index(self) -> int:
        return 2 * self.k

    def _to_parent(self, members: Sequence[Poly]) -> List[Poly]:
        return pull_back(members, basis_substitution(self.basis))

    def lift(self, members: Sequence[Poly]) -> List[Poly]:
        """Lift functions on the reduced slice to N-invariant polynomials in adapted coordinates."""
        Z = Poly.var(coord(self.z_index))
        subst: Dict[VarId, object] = {}
        for a in range(self.s):
            subst[coord(a)] = (self.lifts[a], self.scale * Z)
        if self.has_w:
            subst[coord(self.s)] = Poly.const(1)
        if self.zeta is not None:
            subst[self.zeta] = Z
        return pull_back(members, subst)

    def assemble(self, sub_family: PolyFamily) -> PolyFamily:
        members = self.lift(sub_family.members)
        tags = ["heis_lift"] * len(members)
        for j in range(self.k):
            members.append(Poly.var(coord(j)))
            tags.append("vplus_basis")
        if not self.z_pinned:
            members.append(Poly.var(coord(self.z_index)))
            tags.append("vplus_basis")
        return PolyFamily(self._to_parent(members), tags)

    # identities
    def check_invariance(self) -> bool:
        """Every cleared lift commutes with every element of n, in adapted coordinates."""
        gp = self.adapted
        for L in self.lifts:
            for j in range(2 * self.k + 1):
                if poisson_bracket(gp, L, Poly.var(coord(j))):
                    return False
        return True

    def check_homomorphism(self) -> bool:
        """{L_a, L_b} equals the lift of the reduced bracket, scaled by the clearing factors."""
        gp = self.adapted
        D = self.scale
        Dg = bracket_scale(gp)
        Z = Poly.var(coord(self.z_index))
        for a in range(self.s):
            for b in range(a + 1, self.s):
                lhs = poisson_bracket(gp, self.lifts[a], self.lifts[b])
                terms = [(c, self.lifts[cc] * D * Z) for cc, c in self.cbar[a][b].items()]
                if self.kappa[a][b]:
                    terms.append((self.kappa[a][b], D * D * Z * Z * Z))
                den = Poly.const(1)
                for c, _ in terms:
                    den = poly_lcm(den, c.den)
                rhs = Poly()
                for c, p in terms:
                    rhs = rhs + c.num * den.exquo(c.den) * p
                if lhs * den != rhs * Dg:
                    return False
        return True

    def verify(self) -> Dict[str, bool]:
        return {"n_invariance": self.check_invariance(), "homomorphism": self.check_homomorphism(),
                "jacobi": jacobi_holds(self.quotient.algebra),
                "dim_drop": self.quotient.algebra.dim < self.parent.algebra.dim}

    def step(self) -> dict:
        return {"step": "heis", "dim_before": self.parent.algebra.dim, "dim_after": self.quotient.algebra.dim,
                "params_added": 1 if self.zeta is not None else 0, "pinned": self.quotient.describe_pins()}


def heisenberg_nilradical(g: LieAlgebra, n: Optional[Subspace] = None):
    """(n, Heisenberg basis in g coordinates) or (n, None)."""
    n = n if n is not None else nilradical(g)
    if n.dim == 0:
        return n, None
    hb = heisenberg_recognize(subalgebra(g, n))
    if hb is None:
        return n, None
    lift = lambda v: lift_vector(n, v)
    return n, HeisenbergBasis([lift(v) for v in hb.x], [lift(v) for v in hb.y], lift(hb.z))


def heis_reduce(state: ReductionState, basis: Optional[HeisenbergBasis] = None,
                n: Optional[Subspace] = None) -> HeisReduction:
    g = state.algebra
    dim = g.dim
    if basis is None or n is None:
        n, basis = heisenberg_nilradical(g, n)
        if basis is None:
            raise PreconditionFailed("nilradical is not a Heisenberg algebra")
    z = basis.z
    if bracket_span(g, Subspace.whole(g), Subspace.span(g, [z])).dim:
        raise PreconditionFailed("Heisenberg center is not central in g")
    zval = state.pinned_value(z)
    if zval is not None and zval.is_zero:
        raise PreconditionFailed("z is pinned to 0")
    k = basis.k

    # z-part of [x_j, c] must use the true decomposition, so work in the V + z basis of n
    nbasis = BasisCoords(list(basis.x) + list(basis.y) + [z], dim)

    def zpart(v):
        return nbasis.coords(v)[2 * k]

    comp = []
    for i in n.complement_indices():
        c = unit(dim, i)
        shift = vzero(dim)
        for j in range(k):
            r = zpart(g.bracket(basis.x[j], c))
            rp = zpart(g.bracket(basis.y[j], c))
            if r:
                shift = vsub(shift, vscale(r, basis.y[j]))
            if rp:
                shift = vadd(shift, vscale(rp, basis.x[j]))
        comp.append(vadd(c, shift))
    full = list(basis.x) + list(basis.y) + [z] + comp
    labels = ([f"X{j + 1}" for j in range(k)] + [f"Y{j + 1}" for j in range(k)] + ["Z"]
              + [g.labels[i] for i in n.complement_indices()])
    gp = change_basis(g, full, labels)
    s = len(comp)
    zi = 2 * k
    U = lambda a: zi + 1 + a
    # structure of the reduced bracket
    cbar = [[{} for _ in range(s)] for _ in range(s)]
    kappa = [[ZERO] * s for _ in range(s)]
    for a in range(s):
        for b in range(a + 1, s):
            vec = gp.bracket_basis(U(a), U(b))
            cbar[a][b] = {c: vec[U(c)] for c in range(s) if vec[U(c)]}
            kappa[a][b] = vec[zi]
            kappa[b][a] = -vec[zi]
            cbar[b][a] = {c: -x for c, x in cbar[a][b].items()}
    # adaptation check: [V, C'] has no z-component
    for a in range(s):
        for j in range(2 * k):
            if gp.bracket_basis(j, U(a))[zi]:
                raise InconsistentStructure("complement adaptation failed")
    # cleared lifts: D Z U_a - S_a + 1/2 B(eta_N, w_N)
    K = kirillov_matrix(gp)
    D = bracket_scale(gp)
    X = [Poly.var(coord(j)) for j in range(k)]
    Y = [Poly.var(coord(k + j)) for j in range(k)]
    Z = Poly.var(coord(zi))
    lifts = []
    for a in range(s):
        ua = U(a)
        S = Poly()
        for j in range(k):
            S = S + Y[j] * K[j][ua] - X[j] * K[k + j][ua]
        # V-part of D [eta_N, c'_a]: coefficient p_i on x_i, q_i on y_i
        p = [Poly() for _ in range(k)]
        q = [Poly() for _ in range(k)]
        for j in range(k):
            for src, coeff in ((j, Y[j]), (k + j, -X[j])):
                vec = gp.bracket_basis(src, ua)
                for i in range(k):
                    if vec[i]:
                        p[i] = p[i] + coeff * _scaled(vec[i], D)
                    if vec[k + i]:
                        q[i] = q[i] + coeff * _scaled(vec[k + i], D)
        B = Poly()
        for i in range(k):
            B = B + Y[i] * q[i] + X[i] * p[i]
        lifts.append(D * Z * Poly.var(coord(ua)) - S + B.scale(mpq(1, 2)))
    # reduced state
    has_w = any(kappa[a][b] for a in range(s) for b in range(s))
    zeta = None
    zeta_value = zval
    carried = []
    for v, val in state.constraints:
        c = BasisCoords(full, dim).coords(v)
        pvec = [c[U(a)] for a in range(s)]
        if not any(pvec):
            continue
        carried.append((pvec, val, c[zi]))
    need_zeta = has_w or any(sz for _, _, sz in carried)
    if zeta_value is None and need_zeta:
        zeta = state.counter.fresh()
        zeta_value = RatFunc(Poly.var(zeta))
    qdim = s + (1 if has_w else 0)
    consts = {}
    for a in range(s):
        for b in range(a + 1, s):
            res = dict(cbar[a][b])
            if kappa[a][b]:
                res[s] = kappa[a][b] * zeta_value
            if res:
                consts[(a, b)] = res
    qlabels = [g.labels[i] for i in n.complement_indices()] + (["w"] if has_w else [])
    params = tuple(gp.params) + ((zeta,) if zeta is not None else ())
    q = LieAlgebra(qdim, qlabels, consts, params, name=None, check=True)
    pins = []
    if has_w:
        pins.append((unit(qdim, s), ONE))
    for pvec, val, sz in carried:
        vec = tuple(pvec) + ((ZERO,) if has_w else ())
        pins.append((vec, val - sz * zeta_value if sz else val))
    quotient = ReductionState(q, pins, state.trace, state.counter)
    if q.dim >= dim:
        raise NoDimensionDrop("Heisenberg reduction did not lower the dimension")
    red = HeisReduction(state, quotient, full, gp, k, lifts, D, zeta, zval is not None, has_w, cbar, kappa)
    red.vplus = Subspace.span(g, list(basis.x))
    red.z = z
    return red


def _scaled(c: RatFunc, D: Poly) -> Poly:
    if c.den.is_constant:
        return c.num.scale(1 / c.den.constant_value()) * D
    return c.num * D.exquo(c.den)


def heis_assemble(red: HeisReduction, sub_family: PolyFamily) -> PolyFamily:
    return red.assemble(sub_family)


# -- commutative-ideal reduction -----------------------------------------------------

@dataclass
class ComReduction:
    parent: ReductionState
    h: Subspace
    new_params: List[VarId]
    tilde: ReductionState
    reps: List[Vector]
    theta_w: Vector
    hhat: List[Vector]
    ghat: List[Vector]
    h_basis: List[Vector]
    pinned_h: Optional[Constraint]

    @property
    def x_h_dim(self) -> int:
        return len(self.new_params)

    def pull_back(self, sub_family: PolyFamily) -> PolyFamily:
        # stage 1: g~ coordinates -> linear functions of the representatives (over K(alpha))
        subst: Dict[VarId, object] = {coord(0): Poly.const(1)}
        for a, r in enumerate(self.reps):
            subst[coord(1 + a)] = linear_pair(r)
        stage1 = [poly_substitute(f, subst)[0] for f in sub_family.members]
        # stage 2: alpha_j -> coordinate function of the j-th free basis vector of h
        free = self.h_basis[1:] if self.pinned_h is not None else self.h_basis
        subst2 = {t: linear_pair(b) for t, b in zip(self.new_params, free)}
        members = [normalize(poly_substitute(f, subst2)[0]) for f in stage1]
        tags = ["com_pullback"] * len(members)
        for b in free:
            members.append(linear_poly(b))
            tags.append("h_basis")
        return PolyFamily(members, tags)

    def check_invariance(self, family: PolyFamily) -> bool:
        """Pulled-back members commute with every element of h on the slice."""
        g = self.parent.algebra
        for f, tag in zip(family.members, family.provenance):
            if tag != "com_pullback":
                continue
            for b in self.h_basis:
                br = poisson_bracket(g, f, linear_poly(b))
                if restrict_to_slice(br, self.parent):
                    return False
        return True

    def verify(self) -> Dict[str, bool]:
        gt = self.tilde.algebra
        w_central = all(is_zero_vec(gt.bracket_basis(0, j)) for j in range(gt.dim))
        return {"jacobi": jacobi_holds(gt), "w_central": w_central, "dim_drop": gt.dim < self.parent.algebra.dim}

    def step(self) -> dict:
        return {"step": "com", "dim_before": self.parent.algebra.dim, "dim_after": self.tilde.algebra.dim,
                "params_added": len(self.new_params), "pinned": self.tilde.describe_pins()}


def com_reduce(state: ReductionState, h: Subspace) -> ComReduction:
    g = state.algebra
    n = g.dim
    if h.dim == 0:
        raise NotCommutativeIdeal("h is zero")
    if bracket_span(g, h, h).dim:
        raise NotCommutativeIdeal("h is not commutative")
    if not is_ideal(g, h):
        raise NotAnIdeal("h is not an ideal")
    if h.dim == 1 and not bracket_span(g, Subspace.whole(g), h).dim:
        raise PreconditionFailed("a one-dimensional central h gives no reduction")
    # basis of h: a pinned direction first (if any pin lies in h), then free vectors
    pinned = None
    for v, val in state.constraints:
        if h.contains(v):
            pinned = (v, val)
            break
    if pinned is not None:
        coords0 = h.coords(pinned[0])
        drop = next(i for i, c in enumerate(coords0) if c)
        h_basis = [pinned[0]] + [r for i, r in enumerate(h.rows) if i != drop]
    else:
        h_basis = list(h.rows)
    alphas = [state.counter.fresh() for _ in range(len(h_basis) - (1 if pinned else 0))]
    avals = ([pinned[1]] if pinned else []) + [RatFunc(Poly.var(t)) for t in alphas]
    hc = BasisCoords(h_basis, n)

    def alpha(v):
        return sum((c * a for c, a in zip(hc.coords(v), avals) if c), ZERO)

    # g^ = {xi : alpha([xi, b]) = 0 for b in h}
    rows = []
    for b in h_basis:
        row = tuple(alpha(g.bracket(unit(n, i), b)) for i in range(n))
        if any(row):
            rows.append(row)
    ghat = matk_kernel(MatK(rows, n)) if rows else [unit(n, i) for i in range(n)]
    # theta_w with alpha(theta_w) = 1, and h^ = ker alpha inside h
    theta_w = vscale(avals[0].inverse(), h_basis[0])
    hhat = [vsub(b, vscale(a, theta_w)) for b, a in zip(h_basis[1:], avals[1:])]
    hspan = Subspace.span(g, h_basis)
    acc = hspan
    reps = []
    for v in Subspace.span(g, ghat).rows:
        r = acc.reduce(v)
        if not is_zero_vec(r):
            reps.append(r)
            acc = Subspace.span(g, list(acc.rows) + [r])
    gbasis = hhat + [theta_w] + reps
    bc = BasisCoords(gbasis, n)
    off = len(hhat)
    m = 1 + len(reps)
    tb = [theta_w] + reps
    consts = {}
    for a in range(m):
        for b in range(a + 1, m):
            try:
                c = bc.coords(g.bracket(tb[a], tb[b]))
            except InconsistentStructure:
                raise InconsistentStructure("the annihilator algebra is not closed under the bracket") from None
            nz = {i: c[off + i] for i in range(m) if c[off + i]}
            if nz:
                consts[(a, b)] = nz
    labels = ["w"] + [_rep_label(g, r, i) for i, r in enumerate(reps)]
    params = tuple(g.params) + tuple(alphas)
    gt = LieAlgebra(m, labels, consts, params, check=True)
    if gt.dim >= g.dim:
        raise NoDimensionDrop(f"reduction kept dimension {gt.dim} >= {g.dim}")
    pins = [(unit(m, 0), ONE)]
    for v, val in state.constraints:
        if pinned is not None and v == pinned[0]:
            continue
        c = bc.coords(v)
        pvec = tuple([ZERO] + [c[off + 1 + a] for a in range(len(reps))])
        if not any(pvec):
            raise InconsistentStructure("a pin outside h collapsed into h")
        s = c[off]
        pins.append((pvec, val - s if s else val))
    tilde = ReductionState(gt, pins, state.trace, state.counter)
    return ComReduction(state, h, alphas, tilde, reps, theta_w, hhat, ghat, h_basis, pinned)


def _rep_label(g: LieAlgebra, r: Vector, i: int) -> str:
    nz = [k for k, c in enumerate(r) if c]
    return g.labels[nz[0]] if len(nz) == 1 else f"u{i + 1}"


def com_pullback(red: ComReduction, sub_family: PolyFamily) -> PolyFamily:
    return red.pull_back(sub_family)


# -- base case with constant bracket ---------------------------------------------------

def constant_bracket_family(state: ReductionState) -> Optional[PolyFamily]:
    """If every bracket is pinned to a constant, a maximal commuting set of linear functions."""
    g = state.algebra
    pins = Subspace.span(g, [v for v, _ in state.constraints])
    comp = pins.complement_indices()
    omega = {}
    for a, i in enumerate(comp):
        for j in comp[a + 1:]:
            val = state.pinned_value(g.bracket_basis(i, j))
            if val is None:
                return None
            if val:
                omega[(i, j)] = val
                omega[(j, i)] = -val
    if not omega:
        members = [Poly.var(coord(i)) for i in comp]
        return PolyFamily(members, ["coordinate"] * len(members))

    def form(u, v):
        total = ZERO
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and (i, j) in omega:
                    total = total + a * b * omega[(i, j)]
        return total

    xs, _, rad = darboux([unit(g.dim, i) for i in comp], form)
    members = [linear_poly(v) for v in xs + rad]
    return PolyFamily(members, ["coordinate"] * len(members))

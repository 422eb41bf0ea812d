import random

import pytest

from helpers import heis3_plus_line, poly_in, two_torus, var
from liepoisson import PolyFamily, Subspace, catalog
from liepoisson.errors import InconsistentStructure, NotAnIdeal, NotCommutativeIdeal, PreconditionFailed
from liepoisson.exact import Poly, RatFunc, coord, param
from liepoisson.liealg import HeisenbergBasis, jacobi_holds, nilradical, unit
from liepoisson.poisson import commutativity_check, independence_rank, l_value, poisson_bracket
from liepoisson.reduction import (
    ParamCounter,
    ReductionState,
    canonicalize_pins,
    com_pullback,
    com_reduce,
    constant_bracket_family,
    heis_assemble,
    heis_reduce,
    heisenberg_nilradical,
    linear_pair,
    quotient_zero_pins,
    restrict_to_slice,
)

EMPTY = PolyFamily([])


def vec(*xs):
    return tuple(RatFunc.coerce(x) for x in xs)


def test_param_counter_starts_after_algebra_params():
    from liepoisson import LieAlgebra

    g = LieAlgebra(1, ["a"], {}, [param(4)])
    c = ParamCounter.after(g)
    assert c.fresh() == param(5) and c.fresh() == param(6)


def test_state_rejects_non_central_pin():
    with pytest.raises(InconsistentStructure):
        ReductionState(catalog("heis", 3), [(unit(3, 0), 1)])


def test_state_rejects_dependent_pins():
    g = catalog("abelian", 2)
    with pytest.raises(InconsistentStructure):
        ReductionState(g, [(vec(1, 0), 1), (vec(2, 0), 3)])


def test_linear_pair_clears_parameter_denominators():
    t = Poly.var(param(1))
    num, den = linear_pair((RatFunc(1, t), RatFunc(2)))
    assert den == t and num == var(0) + 2 * t * var(1)


# -- Heisenberg reduction -----------------------------------------------------

def test_heis3_has_empty_lift_and_contributes_x_and_z():
    g = catalog("heis", 3)
    n, hb = heisenberg_nilradical(g)
    red = heis_reduce(ReductionState(g), hb, n)
    assert red.quotient.algebra.dim == 0 and red.lifts == []
    assert heis_assemble(red, EMPTY).members == [var(0), var(2)]


def test_heis3_with_z_pinned_contributes_x_only():
    g = catalog("heis", 3)
    n, hb = heisenberg_nilradical(g)
    red = heis_reduce(ReductionState(g, [(unit(3, 2), 1)]), hb, n)
    assert heis_assemble(red, EMPTY).members == [var(0)]


def test_central_complement_lifts_to_itself():
    g = heis3_plus_line()
    n = Subspace.span(g, [unit(4, 0), unit(4, 1), unit(4, 2)])
    hb = HeisenbergBasis([unit(4, 0)], [unit(4, 1)], unit(4, 2))
    red = heis_reduce(ReductionState(g), hb, n)
    assert red.quotient.algebra.dim == 1 and red.quotient.algebra.is_abelian()
    fam = heis_assemble(red, PolyFamily([var(0)]))
    assert fam.members[0] == var(3)


def test_oscillator_lift():
    g = catalog("oscillator")
    n, hb = heisenberg_nilradical(g)
    red = heis_reduce(ReductionState(g), hb, n)
    assert red.verify() == {"n_invariance": True, "homomorphism": True, "jacobi": True, "dim_drop": True}
    fam = heis_assemble(red, PolyFamily([var(0)]))
    assert len(fam) == 3
    lifted = fam.members[0]
    # h*z plus a quadratic form in x and y, up to scale
    assert lifted == poly_in(g, "2*h*z + x^2 + y^2")
    for v in ("x", "y", "z"):
        assert poisson_bracket(g, lifted, poly_in(g, v)).is_zero
    assert commutativity_check(fam, g).passed
    assert independence_rank(fam, g) == 3 == l_value(g).l


def test_heis_lift_with_central_extension_term():
    g = two_torus()
    n, hb = heisenberg_nilradical(g)
    red = heis_reduce(ReductionState(g), hb, n)
    assert red.has_w
    checks = red.verify()
    assert all(checks.values()), checks


def test_heis_reduce_rejects_z_pinned_to_zero():
    g = catalog("heis", 3)
    n, hb = heisenberg_nilradical(g)
    with pytest.raises(PreconditionFailed):
        heis_reduce(ReductionState(g, [(unit(3, 2), 0)]), hb, n)


def test_heis_assembly_accounting():
    g = catalog("oscillator")
    n, hb = heisenberg_nilradical(g)
    red = heis_reduce(ReductionState(g), hb, n)
    sub = PolyFamily([var(0)])
    assert len(heis_assemble(red, sub)) == len(sub) + hb.k + 1


# -- commutative-ideal reduction -------------------------------------------------

def test_com_reduce_borel():
    g = catalog("borel_sl2")
    h = Subspace.span(g, [unit(2, 1)])
    red = com_reduce(ReductionState(g), h)
    assert Subspace.span(g, red.ghat) == h and red.hhat == []
    gt = red.tilde.algebra
    assert gt.dim == 1 and gt.is_abelian() and gt.labels[0] == "w"
    assert red.tilde.constraints == [(vec(1), RatFunc.coerce(1))]
    assert red.verify() == {"jacobi": True, "w_central": True, "dim_drop": True}
    assert com_pullback(red, EMPTY).members == [var(1)]


def test_com_reduce_heis3_with_two_dimensional_ideal():
    g = catalog("heis", 3)
    h = Subspace.span(g, [unit(3, 1), unit(3, 2)])
    red = com_reduce(ReductionState(g), h)
    assert Subspace.span(g, red.ghat) == h
    assert red.tilde.algebra.dim == 1 and len(red.new_params) == 2
    assert l_value(red.tilde.algebra, red.tilde).l == l_value(g).l - 2
    fam = com_pullback(red, EMPTY)
    assert fam.members == [var(1), var(2)]
    assert commutativity_check(fam, g).passed and independence_rank(fam, g) == 2


def test_com_reduce_preconditions():
    g = catalog("heis", 3)
    with pytest.raises(PreconditionFailed):
        com_reduce(ReductionState(g), Subspace.span(g, [unit(3, 2)]))
    with pytest.raises(NotCommutativeIdeal):
        com_reduce(ReductionState(g), Subspace.whole(g))
    with pytest.raises(NotAnIdeal):
        com_reduce(ReductionState(g), Subspace.span(g, [unit(3, 0)]))


def test_com_reduce_strictly_upper4_accounting():
    g = catalog("strictly_upper", 4)
    from liepoisson.liealg import commutative_characteristic_ideal

    h = commutative_characteristic_ideal(g, nilradical(g))
    red = com_reduce(ReductionState(g), h)
    assert red.verify() == {"jacobi": True, "w_central": True, "dim_drop": True}
    assert jacobi_holds(red.tilde.algebra)
    sub = constant_bracket_family(red.tilde)
    if sub is not None:
        fam = com_pullback(red, sub)
        assert len(fam) == len(sub) + h.dim
        assert red.check_invariance(fam)


def test_pullback_members_commute_with_h():
    from liepoisson.pipeline import _Run, Options

    g = catalog("filiform", 5)
    from liepoisson.liealg import commutative_characteristic_ideal

    h = commutative_characteristic_ideal(g, nilradical(g))
    state = ReductionState(g)
    red = com_reduce(state, h)
    sub = _Run(Options(), random.Random(0)).solve(red.tilde)
    fam = com_pullback(red, sub)
    assert red.check_invariance(fam)
    assert len(fam) == len(sub) + h.dim


# -- pins ---------------------------------------------------------------------

def test_canonicalize_leaves_one_nonzero_pin():
    g = catalog("abelian", 3)
    st = canonicalize_pins(ReductionState(g, [(unit(3, 0), 2), (unit(3, 1), 5)]))
    assert sum(1 for _, val in st.constraints if val) == 1
    # the affine slice is unchanged: both old pins still hold on it
    pt = {coord(0): 2, coord(1): 5}
    for v, val in st.constraints:
        assert sum(c.constant_value() * pt.get(coord(i), 0) for i, c in enumerate(v)) == val.constant_value()


def test_quotient_zero_pins():
    g = catalog("heis", 3)
    step = quotient_zero_pins(ReductionState(g, [(unit(3, 2), 0)]))
    assert step.quotient.algebra.dim == 2 and step.quotient.algebra.is_abelian()
    fam = step.pull_back(PolyFamily([var(0), var(1)]))
    assert fam.members == [var(0), var(1)]


def test_restrict_to_slice_substitutes_pins():
    g = catalog("heis", 3)
    st = ReductionState(g, [(unit(3, 2), 3)])
    assert restrict_to_slice(var(0) * var(2) - 3 * var(0), st).is_zero


def test_constant_bracket_base_case():
    g = catalog("heis", 5)
    st = ReductionState(g, [(unit(5, 4), 1)])
    fam = constant_bracket_family(st)
    assert len(fam) == 2 and commutativity_check(fam, g).passed
    assert constant_bracket_family(ReductionState(g)) is None
    ab = constant_bracket_family(ReductionState(catalog("abelian", 3)))
    assert ab.members == [var(0), var(1), var(2)]

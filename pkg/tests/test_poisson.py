import random

import pytest
from hypothesis import given, strategies as st

import oracles
from helpers import poly_in, var
from liepoisson import PolyFamily, catalog, index, l_value, poisson_bracket
from liepoisson.errors import ParityViolation
from liepoisson.exact import Poly, RatFunc, coord
from liepoisson.poisson import (
    _lvalue,
    commutativity_check,
    independence_rank,
    index_report,
    kirillov_matrix,
    sampled_index,
    symbolic_index,
)
from liepoisson.reduction import ReductionState
from liepoisson.liealg import unit

FROZEN = oracles.load_frozen()


def _catalog(key):
    name, size = key.split(":")
    return catalog(name, int(size))


def test_kirillov_matrix_heis3():
    K = kirillov_matrix(catalog("heis", 3))
    z = var(2)
    assert K == [[Poly(), z, Poly()], [-z, Poly(), Poly()], [Poly(), Poly(), Poly()]]


def test_kirillov_matrix_abelian_and_sl2():
    assert all(not e for row in kirillov_matrix(catalog("abelian", 3)) for e in row)
    K = kirillov_matrix(catalog("sl", 2))
    e, f, h = var(0), var(1), var(2)
    assert K[0][1] == h and K[0][2] == -2 * e and K[1][2] == 2 * f
    assert K[1][0] == -h


def test_bracket_examples():
    h3 = catalog("heis", 3)
    assert poisson_bracket(h3, poly_in(h3, "x*y"), poly_in(h3, "x")) == poly_in(h3, "-x*z")
    p = poly_in(h3, "x^2*y + 3*z")
    assert poisson_bracket(h3, p, p).is_zero
    sl2 = catalog("sl", 2)
    assert poisson_bracket(sl2, poly_in(sl2, "h^2 + 4*e*f"), poly_in(sl2, "e")).is_zero


def test_bracket_with_parametric_constants():
    from liepoisson import LieAlgebra
    from liepoisson.exact import param

    t = param(1)
    g = LieAlgebra(2, ["a", "b"], {(0, 1): {1: RatFunc(Poly.var(t), Poly.var(t) + 1)}}, [t])
    br = poisson_bracket(g, var(0), var(1))
    # the bracket over K is cleared by the lcm of constant denominators
    assert br == Poly.var(t) * var(1)


@pytest.mark.parametrize("name,size,expected", [("heis", 3, 1), ("abelian", 3, 3), ("sl", 2, 1),
                                                ("strictly_upper", 4, 2)])
def test_index_examples(name, size, expected):
    assert index(catalog(name, size)) == expected


@pytest.mark.parametrize("name,size,expected", [("gl", 3, 6), ("heis", 3, 2), ("abelian", 5, 5)])
def test_l_value_examples(name, size, expected):
    assert l_value(catalog(name, size)).l == expected


def test_l_value_on_pinned_slice():
    h3 = catalog("heis", 3)
    st_ = ReductionState(h3, [(unit(3, 2), 1)])
    lv = l_value(h3, st_)
    assert (lv.dim_X, lv.l) == (2, 1)


def test_parity_violation():
    with pytest.raises(ParityViolation):
        _lvalue(3, 0)


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_engine_matches_frozen_oracle(key):
    g = _catalog(key)
    want = FROZEN[key]
    rep = index_report(g)
    assert g.dim == want["dim"]
    assert rep.index == want["index"] and rep.agree
    assert l_value(g).l == want["l"]


def test_oracle_reproduces_frozen_values():
    for key in ("gl:3", "so:4", "strictly_upper:4", "filiform:6", "oscillator:0"):
        name, size = key.split(":")
        assert oracles.compute(name, int(size)) == FROZEN[key]


def test_sampled_and_symbolic_routes_are_separate():
    g = catalog("filiform", 6)
    assert sampled_index(g, seed=3) == symbolic_index(g) == 4


def test_independence_examples():
    ab = catalog("abelian", 3)
    assert independence_rank([var(0), var(1), var(2)], ab) == 3
    assert independence_rank([var(0), var(0) ** 2], ab) == 1
    sl2 = catalog("sl", 2)
    assert independence_rank([poly_in(sl2, "h^2 + 4*e*f"), poly_in(sl2, "f")], sl2) == 2


def test_commutativity_examples():
    h3 = catalog("heis", 3)
    assert commutativity_check(PolyFamily([var(2), var(0)]), h3).passed
    res = commutativity_check([var(0), var(1)], h3)
    assert not res.passed
    (i, j, br), = res.failures
    assert (i, j) == (0, 1) and br == var(2)
    sl2 = catalog("sl", 2)
    assert commutativity_check([poly_in(sl2, "h^2 + 4*e*f"), poly_in(sl2, "f")], sl2).passed


def test_family_rejects_zero_member():
    with pytest.raises(ValueError):
        PolyFamily([Poly()])


ALGEBRAS = [("sl", 2), ("heis", 3), ("borel_sl2", 0), ("oscillator", 0), ("strictly_upper", 3), ("so", 3)]


@st.composite
def algebra_and_polys(draw):
    name, size = draw(st.sampled_from(ALGEBRAS))
    g = catalog(name, size)

    def poly():
        p = Poly()
        for _ in range(draw(st.integers(1, 3))):
            m = Poly.const(draw(st.integers(-4, 4)))
            for i in range(g.dim):
                m = m * var(i) ** draw(st.integers(0, 2))
            p = p + m
        return p

    return g, poly(), poly(), poly()


@given(algebra_and_polys())
def test_bracket_axioms(data):
    g, p, q, r = data
    pb = lambda a, b: poisson_bracket(g, a, b)
    assert pb(p, q) == -pb(q, p)
    assert pb(p, q * r) == pb(p, q) * r + q * pb(p, r)
    assert (pb(p, pb(q, r)) + pb(q, pb(r, p)) + pb(r, pb(p, q))).is_zero


def test_index_report_records_both_ranks():
    rep = index_report(catalog("so", 5), rng=random.Random(1))
    assert rep.sampled_rank == rep.symbolic_rank == 8

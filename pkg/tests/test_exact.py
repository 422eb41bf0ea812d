import random

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from liepoisson.errors import MissingAssignment, ParseError
from liepoisson.exact import (
    MatK,
    Poly,
    RatFunc,
    coord,
    format_poly,
    matk_kernel,
    matk_rank,
    param,
    parse_poly,
    parse_ratfunc,
    poly_arith,
    poly_diff,
    poly_eval,
    poly_gcd,
    poly_substitute,
    rank_q,
)

x1, x2, x3 = (Poly.var(coord(i)) for i in range(3))
t1, t2 = Poly.var(param(1)), Poly.var(param(2))


def P(s):
    return parse_poly(s)


# -- examples ---------------------------------------------------------------

def test_difference_of_squares():
    assert poly_arith(x1 + x2, x1 - x2, "mul") == x1 ** 2 - x2 ** 2


def test_zero_absorbs():
    assert poly_arith(x1 + 3, Poly(), "mul").is_zero


def test_monomial_square_with_parameter():
    assert (t1 * x1) * (t1 * x1) == P("t1^2*x1^2")


def test_arith_add_sub():
    assert poly_arith(x1, x2, "add") == P("x1 + x2")
    assert poly_arith(x1, x1, "sub").is_zero


def test_diff_examples():
    p = x1 ** 2 * x2
    assert poly_diff(p, coord(0)) == 2 * x1 * x2
    assert poly_diff(p, coord(2)).is_zero
    assert poly_diff(x1 ** 3 + t1 * x1, coord(0)) == 3 * x1 ** 2 + t1


def test_eval_examples():
    assert poly_eval(x1 ** 2 + x2, {coord(0): 2, coord(1): 3}) == 7
    assert poly_eval(Poly(), {}) == 0
    assert poly_eval(t1 * x1, {param(1): mpq(1, 2), coord(0): 4}) == 2


def test_eval_missing_variable():
    with pytest.raises(MissingAssignment):
        poly_eval(x1 + x2, {coord(0): 1})


def test_substitute_examples():
    assert poly_substitute(x1, {coord(0): (x2, x3)}) == (x2, x3)
    assert poly_substitute(x1 ** 2, {coord(0): (x2, x3)}) == (x2 ** 2, x3 ** 2)
    assert poly_substitute(x1 + x2, {coord(0): x2}) == (2 * x2, Poly.const(1))


def test_substitute_cancels_common_factor():
    num, den = poly_substitute(x1 * x3, {coord(0): (x2, x3)})
    assert (num, den) == (x2, Poly.const(1))


def test_kernel_examples():
    eye = MatK([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert matk_kernel(eye) == []
    assert len(matk_kernel(MatK([[0, 0, 0], [0, 0, 0]]))) == 3
    (v,) = matk_kernel(MatK([[RatFunc(t1), 1]]))
    assert v == (RatFunc(1), RatFunc(-t1))


def test_rank_examples():
    assert matk_rank(MatK([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert matk_rank(MatK([[RatFunc(t1), RatFunc(t1)], [1, 1]])) == 1
    assert matk_rank(MatK([[0, 0], [0, 0]])) == 0


def test_ratfunc_normal_form():
    r = RatFunc(t1 ** 2 - 1, 2 * t1 - 2)
    assert r.num == (t1 + 1).scale(mpq(1, 2)) and r.den == Poly.const(1)
    s = RatFunc(1, 3 * t1 + 6)
    assert s.den == t1 + 2 and s.num == Poly.const(mpq(1, 3))


def test_ratfunc_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_ratfunc_rejects_coordinates():
    with pytest.raises(ValueError):
        RatFunc(x1)


def test_format_and_parse_round_trip():
    p = P("3/2*x1^2*x3 - t1*x2")
    assert format_poly(p) == "3/2*x1^2*x3 - t1*x2"
    assert parse_poly(format_poly(p)) == p


def test_format_negative_leading_and_constant():
    assert format_poly(P("-x1 + 2")) == "-x1 + 2"
    assert format_poly(Poly()) == "0"


def test_parse_errors():
    for bad in ["", "x1 +", "2**", "x1^a", "foo"]:
        with pytest.raises(ParseError):
            parse_poly(bad)


def test_parse_ratfunc_fraction():
    r = parse_ratfunc("(t1^2 - 1)/(t1 - 1)")
    assert r == RatFunc(t1 + 1)


def test_parse_with_labels():
    names = {"x": coord(0), "y": coord(1)}
    assert parse_poly("x*y - t3", names) == x1 * x2 - Poly.var(param(3))


def test_gcd():
    g = poly_gcd((x1 + 1) * (x2 - t1), (x1 + 1) * (x2 + 3))
    assert g == x1 + 1


def test_exquo_inexact_raises():
    with pytest.raises(ValueError):
        (x1 + 1).exquo(x2)


# -- properties ---------------------------------------------------------------

VARS = [coord(0), coord(1), coord(2), param(1)]


@st.composite
def polys(draw, max_terms=4, max_exp=2):
    n = draw(st.integers(0, max_terms))
    p = Poly()
    for _ in range(n):
        c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
        mono = Poly.const(c)
        for v in VARS:
            mono = mono * Poly.var(v) ** draw(st.integers(0, max_exp))
        p = p + mono
    return p


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - a).is_zero


@given(polys(), polys(), st.sampled_from(VARS))
def test_leibniz_rule(p, q, v):
    assert (p * q).diff(v) == p * q.diff(v) + q * p.diff(v)


@given(polys(), polys())
def test_exact_division_inverts_product(a, b):
    if not b.is_zero:
        assert (a * b).exquo(b) == a


@given(st.integers(0, 10 ** 6))
def test_rank_matches_evaluation(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)

    def entry():
        e = Poly.const(rng.randint(-3, 3))
        if rng.random() < 0.5:
            e = e + Poly.const(rng.randint(-2, 2)) * t1 ** rng.randint(1, 2)
        if rng.random() < 0.3:
            e = e + t2 * t1
        return RatFunc(e)

    base = [[entry() for _ in range(cols)] for _ in range(rows)]
    if rows > 1 and rng.random() < 0.5:
        base[-1] = [a + b * 2 for a, b in zip(base[0], base[1 % rows])]
    m = MatK(base, cols)
    r = matk_rank(m)
    best = 0
    for _ in range(6):
        pt = {param(1): rng.randint(-10 ** 4, 10 ** 4), param(2): rng.randint(-10 ** 4, 10 ** 4)}
        best = max(best, rank_q(m.evaluate(pt)))
    assert best == r
    for v in matk_kernel(m):
        for row in m.rows:
            assert sum((a * b for a, b in zip(row, v)), RatFunc()).is_zero
    assert len(matk_kernel(m)) == cols - r


@given(polys(max_terms=3), st.integers(0, 10 ** 6))
def test_substitution_agrees_with_evaluation(p, seed):
    rng = random.Random(seed)
    images = {coord(0): (x2 + t1, x3 + 2), coord(1): (x3 * x3, Poly.const(1))}
    num, den = poly_substitute(p, images)
    for _ in range(3):
        pt = {coord(1): rng.randint(-9, 9), coord(2): rng.randint(-9, 9), param(1): rng.randint(-9, 9)}
        if pt[coord(2)] == -2:
            continue
        img = {coord(0): (pt[coord(1)] + pt[param(1)]) / mpq(pt[coord(2)] + 2), coord(1): mpq(pt[coord(2)]) ** 2}
        direct = p.evaluate({**pt, **img})
        assert num.evaluate(pt) == direct * den.evaluate(pt)

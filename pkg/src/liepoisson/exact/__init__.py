"""Exact arithmetic: rationals, sparse polynomials, K = Q(t...), fraction-free linear algebra."""
from gmpy2 import mpq as Rational

from .linalg import MatK, bareiss_rank, matk_kernel, matk_rank, matk_rref, rank_q, rref_den
from .poly import (
    COORD,
    PARAM,
    Poly,
    VarId,
    coord,
    format_poly,
    param,
    parse_poly,
    poly_arith,
    poly_cofactors,
    poly_diff,
    poly_eval,
    poly_gcd,
    poly_substitute,
    to_q,
)
from .ratfunc import ONE, ZERO, RatFunc, parse_ratfunc

__all__ = [
    "Rational", "MatK", "bareiss_rank", "matk_kernel", "matk_rank", "matk_rref", "rank_q",
    "rref_den", "COORD", "PARAM", "Poly", "VarId", "coord", "format_poly", "param",
    "parse_poly", "poly_arith", "poly_cofactors", "poly_diff", "poly_eval", "poly_gcd",
    "poly_substitute", "to_q", "ONE", "ZERO", "RatFunc", "parse_ratfunc",
]

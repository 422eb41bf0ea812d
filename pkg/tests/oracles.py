"""Independent reference computations in sympy, used to freeze expected values.

Nothing here imports the engine: algebras are rebuilt from their matrix or
bracket definitions and ranks are taken with sympy.  Run as a script to
regenerate ``data/frozen_oracles.json``.
"""
import json
import os
import random

import sympy as sp

HERE = os.path.dirname(__file__)
FROZEN = os.path.join(HERE, "data", "frozen_oracles.json")


def _unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def matrix_basis(kind, n):
    if kind == "gl":
        return [_unit(n, i, j) for i in range(n) for j in range(n)]
    if kind == "sl":
        out = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        return out + [_unit(n, i, i) - _unit(n, n - 1, n - 1) for i in range(n - 1)]
    if kind == "so":
        return [_unit(n, i, j) - _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    if kind == "sp":
        m = n // 2
        J = sp.zeros(n, n)
        J[:m, m:] = sp.eye(m)
        J[m:, :m] = -sp.eye(m)
        syms = sp.symbols(f"a0:{n * n}")
        X = sp.Matrix(n, n, syms)
        eqs = list(X.T * J + J * X)
        A, _ = sp.linear_eq_to_matrix(eqs, syms)
        return [sp.Matrix(n, n, list(v)) for v in A.nullspace()]
    if kind == "strictly_upper":
        return [_unit(n, i, j) for i in range(n) for j in range(i + 1, n)]
    raise KeyError(kind)


def constants_from_matrices(mats):
    """c[i][j] = coordinates of [b_i, b_j] in the basis, via a sympy least-squares-free solve."""
    d = len(mats)
    B = sp.Matrix([list(m) for m in mats]).T
    consts = {}
    for i in range(d):
        for j in range(i + 1, d):
            c = mats[i] * mats[j] - mats[j] * mats[i]
            sol = B.solve_least_squares(sp.Matrix(list(c))) if any(c) else sp.zeros(d, 1)
            assert B * sol == sp.Matrix(list(c))
            if any(sol):
                consts[(i, j)] = list(sol)
    return d, consts


def table_algebra(name, n=0):
    """Bracket tables written out directly."""
    consts = {}
    if name == "heis":
        k = (n - 1) // 2
        for i in range(k):
            v = [0] * n
            v[n - 1] = 1
            consts[(i, k + i)] = v
        return n, consts
    if name == "abelian":
        return n, {}
    if name == "filiform":
        for i in range(1, n - 1):
            v = [0] * n
            v[i + 1] = 1
            consts[(0, i)] = v
        return n, consts
    if name == "borel_sl2":
        return 2, {(0, 1): [0, 1]}
    if name == "oscillator":
        return 4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, -1, 0, 0], (1, 2): [0, 0, 0, 1]}
    raise KeyError(name)


def kirillov_rank_oracle(d, consts, trials=8, seed=12345, bound=10 ** 4):
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        xi = [rng.randint(-bound, bound) for _ in range(d)]
        K = sp.zeros(d, d)
        for (i, j), v in consts.items():
            val = sum(sp.Rational(c) * x for c, x in zip(v, xi))
            K[i, j] = val
            K[j, i] = -val
        best = max(best, K.rank())
    return best


def oracle_entries():
    """(name, kind, size) for every catalog algebra of dimension at most 10."""
    out = []
    for n in (1, 2, 3):
        out.append(("gl", n))
    for n in (2, 3):
        out.append(("sl", n))
    for n in (2, 3, 4, 5):
        out.append(("so", n))
    for n in (2, 4):
        out.append(("sp", n))
    for n in (1, 3, 5, 7, 9):
        out.append(("heis", n))
    for n in (2, 3, 4, 5):
        out.append(("strictly_upper", n))
    for n in range(1, 11):
        out.append(("abelian", n))
    for n in range(2, 11):
        out.append(("filiform", n))
    out.append(("borel_sl2", 0))
    out.append(("oscillator", 0))
    return out


def compute(kind, n):
    if kind in ("gl", "sl", "so", "sp", "strictly_upper"):
        d, consts = constants_from_matrices(matrix_basis(kind, n))
    else:
        d, consts = table_algebra(kind, n)
    rank = kirillov_rank_oracle(d, consts)
    ind = d - rank
    return {"dim": d, "index": ind, "l": (d + ind) // 2}


def freeze():
    data = {f"{k}:{n}": compute(k, n) for k, n in oracle_entries()}
    with open(FROZEN, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
    return data


def load_frozen():
    with open(FROZEN) as fh:
        return json.load(fh)


if __name__ == "__main__":
    for key, val in sorted(freeze().items()):
        print(key, val)

"""Seeded random solvable Lie algebras: nilpotent laws extended by diagonal derivations."""
from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from gmpy2 import mpq

from .exact import MatK, matk_kernel
from .liealg import LieAlgebra, change_basis, jacobi_holds, unit, vcomb


def random_nilpotent_law(m: int, rng: random.Random, density: float = 0.4, tries: int = 200) -> Dict:
    """[e_i, e_j] = c e_k with k > max(i, j); filtered by the Jacobi identity."""
    for _ in range(tries):
        consts = {}
        for i in range(m):
            for j in range(i + 1, m):
                targets = list(range(j + 1, m))
                if targets and rng.random() < density:
                    consts[(i, j)] = {rng.choice(targets): rng.choice([1, 1, 2, -1, 3])}
        g = LieAlgebra(m, [f"n{i + 1}" for i in range(m)], consts, check=False)
        if jacobi_holds(g):
            return consts
    return {}


def diagonal_weights(m: int, consts: Dict, count: int, rng: random.Random) -> List[List[int]]:
    """Integer weight vectors lambda with lambda_k = lambda_i + lambda_j on every bracket."""
    rows = []
    for (i, j), res in consts.items():
        for k in res:
            row = [0] * m
            row[k] += 1
            row[i] -= 1
            row[j] -= 1
            rows.append(row)
    kernel = matk_kernel(MatK(rows, m)) if rows else [unit(m, i) for i in range(m)]
    out = []
    for _ in range(count):
        coeffs = [rng.randint(-3, 3) for _ in kernel]
        vec = vcomb(coeffs, kernel, m)
        out.append([int(c.constant_value()) for c in vec])
    return out


def random_solvable(seed: int, max_dim: int = 6, change: bool = True) -> LieAlgebra:
    rng = random.Random(seed)
    m = rng.randint(2, max_dim - 1)
    ext = rng.randint(0, min(2, max_dim - m))
    consts = random_nilpotent_law(m, rng)
    weights = [w for w in diagonal_weights(m, consts, ext, rng)]
    dim = m + len(weights)
    full: Dict[Tuple[int, int], Dict[int, int]] = {}
    # derivations first, nilpotent part after
    for t, lam in enumerate(weights):
        for i, li in enumerate(lam):
            if li:
                full[(t, len(weights) + i)] = {len(weights) + i: li}
    off = len(weights)
    for (i, j), res in consts.items():
        full[(off + i, off + j)] = {off + k: c for k, c in res.items()}
    labels = [f"d{t + 1}" for t in range(len(weights))] + [f"n{i + 1}" for i in range(m)]
    g = LieAlgebra(dim, labels, full, name=f"random{seed}")
    if change and dim > 1 and rng.random() < 0.5:
        basis = []
        for i in range(dim):
            v = [mpq(0)] * dim
            v[i] = mpq(1)
            for j in range(i + 1, dim):
                if rng.random() < 0.3:
                    v[j] = mpq(rng.randint(-2, 2))
            basis.append(tuple(v))
        perm = list(range(dim))
        rng.shuffle(perm)
        basis = [basis[p] for p in perm]
        from .exact.ratfunc import RatFunc

        basis = [tuple(RatFunc.coerce(x) for x in v) for v in basis]
        g = change_basis(g, basis, [f"b{i + 1}" for i in range(dim)], check=True)
        g.name = f"random{seed}"
    g.meta["solvable"] = True
    return g

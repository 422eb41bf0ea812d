"""Small constructions shared by several test modules."""
from liepoisson import LieAlgebra
from liepoisson.exact import Poly, coord, parse_poly


def direct_sum(g, h, labels=None):
    """g + h with the two summands commuting."""
    consts = {}
    for (i, j), v in g.consts().items():
        consts[(i, j)] = dict(v)
    for (i, j), v in h.consts().items():
        consts[(g.dim + i, g.dim + j)] = {g.dim + k: c for k, c in v.items()}
    labels = labels or list(g.labels) + list(h.labels)
    return LieAlgebra(g.dim + h.dim, labels, consts, tuple(g.params) + tuple(h.params))


def heis3_plus_line():
    return LieAlgebra(4, ["x", "y", "z", "c"], {(0, 1): {2: 1}})


def two_torus():
    """Two commuting rotations of heis5 whose complement bracket has a z-component."""
    # basis d1, d2, x1, x2, y1, y2, z
    consts = {
        (0, 2): {4: 1}, (0, 4): {2: -1},
        (1, 3): {5: 1}, (1, 5): {3: -1},
        (2, 4): {6: 1}, (3, 5): {6: 1},
        (0, 1): {6: 1},
    }
    return LieAlgebra(7, ["d1", "d2", "x1", "x2", "y1", "y2", "z"], consts)


def var(i):
    return Poly.var(coord(i))


def poly_in(g, text):
    return parse_poly(text, {label: coord(i) for i, label in enumerate(g.labels)})

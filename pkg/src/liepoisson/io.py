"""JSON formats for Lie algebras and polynomial families."""
from __future__ import annotations

import json
import re
from typing import Dict, List, Union

from .catalog import catalog
from .errors import DimensionMismatch, LiePoissonError, ParseError
from .exact import Poly, coord, param, parse_poly, parse_ratfunc
from .liealg import LieAlgebra
from .poisson import PolyFamily


def coordinate_names(g: LieAlgebra) -> Dict[str, object]:
    return {label: coord(i) for i, label in enumerate(g.labels)}


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), vec in sorted(g.consts().items()):
        brackets.append({"i": i, "j": j, "result": {str(k): c.to_str() for k, c in sorted(vec.items())}})
    out = {
        "dim": g.dim,
        "basis": list(g.labels),
        "params": [f"t{p.index}" for p in g.params],
        "brackets": brackets,
    }
    if g.name:
        out["name"] = g.name
    return out


def algebra_from_dict(data: dict, name: str = None) -> LieAlgebra:
    try:
        dim = int(data["dim"])
        basis = [str(b) for b in data.get("basis") or [f"x{i + 1}" for i in range(dim)]]
        params = []
        for p in data.get("params", []):
            if not (isinstance(p, str) and p.startswith("t") and p[1:].isdigit()):
                raise ParseError(f"parameter names must look like t<k>, got {p!r}")
            params.append(param(int(p[1:])))
        consts = {}
        for entry in data.get("brackets", []):
            i, j = int(entry["i"]), int(entry["j"])
            res = {}
            for k, c in entry["result"].items():
                res[int(k)] = parse_ratfunc(str(c))
            key = (i, j) if i < j else (j, i)
            if i > j:
                res = {k: -c for k, c in res.items()}
            if key in consts:
                raise ParseError(f"bracket ({i}, {j}) given twice")
            if i == j:
                raise ParseError("a bracket [e_i, e_i] cannot be specified")
            consts[key] = res
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ParseError, DimensionMismatch)):
            raise
        raise ParseError(f"malformed algebra description: {exc}") from exc
    if len(basis) != dim:
        raise ParseError("basis length does not match dim")
    for (i, j), res in consts.items():
        if not (0 <= i < dim and 0 <= j < dim) or any(not 0 <= k < dim for k in res):
            raise ParseError(f"bracket index out of range in ({i}, {j})")
    g = LieAlgebra(dim, basis, consts, params, name=name or data.get("name"))
    known = _classical_twin(g)
    if known is not None:
        return known
    if data.get("invariants"):
        names = coordinate_names(g)
        g.meta["invariants"] = [parse_poly(str(t), names) for t in data["invariants"]]
    return g


def _classical_twin(g: LieAlgebra):
    """The catalog algebra carrying the same name, if its structure constants agree exactly."""
    m = re.fullmatch(r"(gl|sl|so|sp)(\d+)", g.name or "")
    if not m:
        return None
    try:
        ref = catalog(m.group(1), int(m.group(2)))
    except LiePoissonError:
        return None
    return ref if ref == g else None


def load_algebra(path: str) -> LieAlgebra:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return algebra_from_dict(data)


def dump_algebra(g: LieAlgebra) -> str:
    return json.dumps(algebra_to_dict(g), indent=2)


def parse_family(g: LieAlgebra, items: List[str]) -> PolyFamily:
    names = coordinate_names(g)
    members = []
    for text in items:
        p = parse_poly(str(text), names)
        if p.is_zero:
            raise ParseError(f"family member {text!r} is zero")
        members.append(p)
    return PolyFamily(members, ["user"] * len(members))


def load_family(g: LieAlgebra, path: str) -> PolyFamily:
    """A JSON list of polynomial strings, an object with a "family" list, or one polynomial per line."""
    with open(path) as fh:
        text = fh.read()
    try:
        data: Union[list, dict] = json.loads(text)
    except json.JSONDecodeError:
        data = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if isinstance(data, dict):
        data = data.get("family")
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a list of polynomials")
    return parse_family(g, data)


def format_family(g: LieAlgebra, family) -> List[str]:
    members = family.members if isinstance(family, PolyFamily) else family
    return [Poly.coerce(m).to_str(g.label_of) for m in members]

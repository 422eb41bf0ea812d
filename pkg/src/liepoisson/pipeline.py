"""Recursive construction of complete commutative families and their certification."""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import List, Optional

from .argshift import complete_on_dual, invariants_for
from .errors import InconsistentStructure, NoDimensionDrop, Unsupported
from .exact import Poly
from .liealg import LieAlgebra, is_solvable, nilradical, commutative_characteristic_ideal, Subspace
from .poisson import (
    PolyFamily,
    commutativity_check,
    independence_samples,
    l_value,
)
from .reduction import (
    ReductionState,
    canonicalize_pins,
    com_reduce,
    constant_bracket_family,
    heis_reduce,
    heisenberg_nilradical,
    quotient_zero_pins,
)

SCHEMA = 1


@dataclass
class Options:
    seed: int = 0
    trials: int = 8
    coeff_range: int = 10 ** 4
    symbolic_cutoff: int = 12
    retry_budget: int = 5
    rounds: int = 3
    check_steps: bool = False


@dataclass
class Certificate:
    algebra: LieAlgebra
    target_l: int
    family: PolyFamily
    pairs_checked: int
    failures: list
    rank: int
    rank_samples: List[int]
    trials: int
    coeff_range: int
    seed: int
    trace: List[dict] = field(default_factory=list)
    checks: List[dict] = field(default_factory=list)

    @property
    def commutes(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        if not self.commutes:
            return "failed"
        if self.rank == self.target_l and len(self.family) == self.target_l:
            return "complete"
        return "incomplete"

    def to_dict(self) -> dict:
        g = self.algebra
        return {
            "schema": SCHEMA,
            "algebra": fingerprint(g),
            "target_l": self.target_l,
            "family": self.family.strings(g),
            "provenance": list(self.family.provenance),
            "commutativity": {
                "pairs_checked": self.pairs_checked,
                "failures": [{"i": i, "j": j, "bracket": b.to_str(g.label_of)} for i, j, b in self.failures],
            },
            "independence": {
                "rank": self.rank,
                "rank_samples": list(self.rank_samples),
                "trials": self.trials,
                "range": self.coeff_range,
                "seed": self.seed,
            },
            "trace": list(self.trace),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def fingerprint(g: LieAlgebra) -> dict:
    from .io import algebra_to_dict

    blob = json.dumps(algebra_to_dict(g), sort_keys=True).encode()
    return {"name": g.name, "dim": g.dim, "sha256": hashlib.sha256(blob).hexdigest()}


# -- recursion ------------------------------------------------------------------

class _Run:
    def __init__(self, opts: Options, rng: random.Random):
        self.opts = opts
        self.rng = rng
        self.trace: List[dict] = []
        self.checks: List[dict] = []

    def solve(self, state: ReductionState, top: bool = False) -> PolyFamily:
        state = canonicalize_pins(state)
        g = state.algebra
        if any(not val for _, val in state.constraints):
            step = quotient_zero_pins(state)
            self._record({"step": "quotient", "dim_before": g.dim, "dim_after": step.quotient.algebra.dim,
                          "params_added": 0, "pinned": step.quotient.describe_pins()})
            return step.pull_back(self.solve(step.quotient))
        base = constant_bracket_family(state)
        if base is not None:
            self._record({"step": "base", "dim_before": g.dim, "dim_after": 0, "params_added": 0,
                          "pinned": state.describe_pins()})
            return base
        if not is_solvable(g):
            inv = invariants_for(g) if (top and not state.constraints) else None
            if inv is None:
                raise Unsupported(f"no invariants for the non-solvable algebra {g.name or g.labels}")
            res = complete_on_dual(g, rng=random.Random(self.rng.getrandbits(64)), inv=inv,
                                   budget=self.opts.retry_budget, trials=self.opts.trials,
                                   coeff_range=self.opts.coeff_range)
            self._record({"step": "argshift", "dim_before": g.dim, "dim_after": 0, "params_added": 0,
                          "pinned": [], "a": [str(x) for x in res.family.a], "draws": res.draws})
            return res.family.as_family()
        n = nilradical(g, rng=random.Random(self.rng.getrandbits(64)))
        n, hb = heisenberg_nilradical(g, n)
        if hb is not None and _central(g, hb.z):
            red = heis_reduce(state, hb, n)
            self._record(red.step(), red.verify() if self.opts.check_steps else None)
            if red.quotient.algebra.dim >= g.dim:
                raise NoDimensionDrop("Heisenberg step did not lower the dimension")
            return red.assemble(self.solve(red.quotient))
        h = commutative_characteristic_ideal(g, n)
        if h is None:
            raise InconsistentStructure("no reduction applies")
        red = com_reduce(state, h)
        self._record(red.step())
        fam = red.pull_back(self.solve(red.tilde))
        if self.opts.check_steps:
            self.checks.append(dict(step="com", **red.verify(), h_invariance=red.check_invariance(fam)))
        return fam

    def _record(self, step: dict, checks: Optional[dict] = None):
        if checks is not None:
            self.checks.append(dict(step=step["step"], **checks))
        self.trace.append(step)


def _central(g: LieAlgebra, z) -> bool:
    from .liealg import unit

    return all(not any(g.bracket(unit(g.dim, i), z)) for i in range(g.dim))


def construct(g: LieAlgebra, opts: Optional[Options] = None, **kw) -> Certificate:
    """Build a commutative family of size l(g*) and certify it on g*."""
    opts = opts or Options(**kw)
    rng = random.Random(opts.seed)
    run = _Run(opts, rng)
    family = run.solve(ReductionState(g), top=True)
    trace = run.trace
    cert = certify(g, family, opts, rng)
    cert.trace = trace
    cert.checks = run.checks
    _check_trace(trace)
    return cert


def _check_trace(trace: List[dict]) -> None:
    for s in trace:
        if s["step"] in ("heis", "com", "quotient") and not s["dim_after"] < s["dim_before"]:
            raise NoDimensionDrop(f"step {s['step']} kept dimension {s['dim_before']}")


def certify(g: LieAlgebra, family: PolyFamily, opts: Options, rng: Optional[random.Random] = None) -> Certificate:
    rng = rng or random.Random(opts.seed)
    target = l_value(g, trials=opts.trials, coeff_range=opts.coeff_range, symbolic_cutoff=opts.symbolic_cutoff,
                     rng=random.Random(rng.getrandbits(64))).l
    comm = commutativity_check(family, g)
    samples: List[int] = []
    rank = 0
    for _ in range(max(opts.rounds, 1)):
        res = independence_samples(family, g, trials=opts.trials, coeff_range=opts.coeff_range,
                                   rng=random.Random(rng.getrandbits(64)))
        samples.extend(res.samples)
        rank = max(rank, res.rank)
        if rank >= min(target, len(family)):
            break
    return Certificate(g, target, family, comm.pairs_checked, comm.failures, rank, samples,
                       opts.trials, opts.coeff_range, opts.seed)


def verify(g: LieAlgebra, family, opts: Optional[Options] = None, **kw) -> Certificate:
    opts = opts or Options(**kw)
    if not isinstance(family, PolyFamily):
        family = PolyFamily(list(family))
    return certify(g, family, opts)

"""Command-line interface.

Exit codes: 0 success, 1 other error, 2 parse error, 3 Jacobi failure,
4 unsupported input, 5 incomplete or failed verdict.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from typing import List, Optional

from . import argshift, io, pipeline
from .catalog import NAMES, catalog
from .errors import JacobiError, LiePoissonError, ParseError, Unsupported
from .exact import parse_ratfunc
from .liealg import center, nilradical, solvable_radical, subalgebra, heisenberg_recognize
from .poisson import index_report, l_value

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_JACOBI, EXIT_UNSUPPORTED, EXIT_INCOMPLETE = 0, 1, 2, 3, 4, 5


def _load(source: str):
    """A JSON file, or ``name:size`` for a catalog algebra."""
    if not os.path.exists(source):
        m = re.fullmatch(r"([a-z_0-9]+?)(?::(\d+))?", source)
        if m and m.group(1) in NAMES:
            return catalog(m.group(1), int(m.group(2) or 0))
        raise ParseError(f"no such file: {source}")
    return io.load_algebra(source)


def _csv(text: str) -> List:
    try:
        return [parse_ratfunc(x.strip()).constant_value() for x in text.split(",") if x.strip()]
    except (LiePoissonError, ValueError) as exc:
        raise ParseError(f"bad numeric list {text!r}") from exc


def _opts(args) -> pipeline.Options:
    return pipeline.Options(seed=args.seed, trials=args.trials, coeff_range=args.range,
                            symbolic_cutoff=args.symbolic_cutoff, retry_budget=args.retry_budget)


def _emit(args, data: dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _cert_lines(cert: pipeline.Certificate) -> List[str]:
    g = cert.algebra
    d = cert.to_dict()
    lines = [f"algebra: {g.name or 'g'} (dim {g.dim})", f"target l: {cert.target_l}", "family:"]
    lines += [f"  {s}" for s in d["family"]]
    if cert.commutes:
        lines.append(f"commutativity: pass ({cert.pairs_checked} pairs)")
    else:
        lines.append(f"commutativity: FAIL ({len(cert.failures)} of {cert.pairs_checked} pairs)")
        for f in d["commutativity"]["failures"]:
            lines.append(f"  {{{d['family'][f['i']]}, {d['family'][f['j']]}}} = {f['bracket']}")
    lines.append(f"independence: rank {cert.rank} (samples {cert.rank_samples}, trials {cert.trials}, "
                 f"range {cert.coeff_range}, seed {cert.seed})")
    for s in cert.trace:
        pins = f" pinned {s['pinned']}" if s["pinned"] else ""
        lines.append(f"step {s['step']}: dim {s['dim_before']} -> {s['dim_after']}, "
                     f"params +{s['params_added']}{pins}")
    lines.append(f"verdict: {cert.verdict}")
    return lines


def _cert_exit(cert) -> int:
    return EXIT_OK if cert.verdict == "complete" else EXIT_INCOMPLETE


def cmd_analyze(args) -> int:
    g = _load(args.file)
    rng = random.Random(args.seed)
    rep = index_report(g, trials=args.trials, coeff_range=args.range, rng=rng, symbolic_cutoff=args.symbolic_cutoff)
    lv = l_value(g, trials=args.trials, coeff_range=args.range, rng=random.Random(args.seed),
                 symbolic_cutoff=args.symbolic_cutoff)
    nil = nilradical(g, rng=random.Random(args.seed))
    heis = nil.dim > 0 and heisenberg_recognize(subalgebra(g, nil)) is not None
    data = {
        "algebra": pipeline.fingerprint(g),
        "center": center(g).dim,
        "radical": solvable_radical(g).dim,
        "nilradical": nil.dim,
        "nilradical_heisenberg": heis,
        "index": rep.index,
        "index_sampled": g.dim - rep.sampled_rank,
        "index_symbolic": None if rep.symbolic_rank is None else g.dim - rep.symbolic_rank,
        "l": lv.l,
        "seed": args.seed,
    }
    lines = [
        f"algebra: {g.name or 'g'} (dim {g.dim})",
        f"center: dim {data['center']}",
        f"solvable radical: dim {data['radical']}",
        f"nilradical: dim {data['nilradical']}",
        f"nilradical Heisenberg: {'yes' if heis else 'no'}",
        f"ind: {rep.index}",
        f"l: {lv.l}",
        f"seed: {args.seed}",
    ]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_shift(args) -> int:
    g = _load(args.file)
    inv = argshift.invariants_for(g)
    if inv is None:
        raise Unsupported(f"no invariants for {g.name or 'algebra'}")
    a = _csv(args.a) if args.a else [random.Random(args.seed).randint(-20, 20) for _ in range(g.dim)]
    fam = argshift.shift_family(inv, a)
    cert = pipeline.verify(g, fam.as_family(), _opts(args))
    data = dict(cert.to_dict(), a=[str(x) for x in fam.a])
    _emit(args, data, [f"a: {','.join(str(x) for x in fam.a)}"] + _cert_lines(cert))
    return _cert_exit(cert)


def cmd_complete(args) -> int:
    g = _load(args.file)
    cert = pipeline.construct(g, _opts(args))
    _emit(args, cert.to_dict(), _cert_lines(cert))
    return _cert_exit(cert)


def cmd_verify(args) -> int:
    g = _load(args.file)
    fam = io.load_family(g, args.family)
    cert = pipeline.verify(g, fam, _opts(args))
    _emit(args, cert.to_dict(), _cert_lines(cert))
    return _cert_exit(cert)


def cmd_orbit(args) -> int:
    g = _load(args.file)
    xi = _csv(args.xi)
    rep = argshift.orbit_criterion(g, xi, seed=args.seed, budget=args.retry_budget)
    data = {
        "xi": [str(x) for x in rep.xi],
        "orbit_dim": rep.orbit_dim,
        "ind_g": rep.ind_g,
        "ind_stabilizer": rep.ind_stabilizer,
        "stabilizer_dim": rep.stabilizer_dim,
        "dim_v": rep.dim_v,
        "a": None if rep.a is None else [str(x) for x in rep.a],
        "draws": rep.draws,
        "verdict": rep.verdict,
        "seed": args.seed,
    }
    eq = "=" if rep.index_matches else "!="
    lines = [
        f"orbit dimension: {rep.orbit_dim}",
        f"stabilizer: dim {rep.stabilizer_dim}, ind g_xi = {rep.ind_stabilizer}",
        f"dim V = {rep.dim_v} (a = {','.join(data['a'] or [])}, {rep.draws} draws)",
    ]
    if rep.verdict == "complete":
        lines.append(f"complete on orbit, ind g_xi = ind g = {rep.ind_g}")
    else:
        lines.append(f"incomplete on orbit, ind g_xi = {rep.ind_stabilizer} {eq} ind g = {rep.ind_g}")
    lines.append(f"seed: {args.seed}")
    _emit(args, data, lines)
    return EXIT_OK if rep.verdict == "complete" else EXIT_INCOMPLETE


def cmd_catalog(args) -> int:
    g = catalog(args.name, args.size)
    print(io.dump_algebra(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--trials", type=_positive, default=8, help="random points per rank estimate")
    common.add_argument("--range", type=_positive, default=10 ** 4, help="sample coordinates lie in [-range, range]")
    common.add_argument("--symbolic-cutoff", type=_positive, default=12,
                        help="largest dimension for the exact rank over the function field")
    common.add_argument("--retry-budget", type=_positive, default=5, help="shift-vector draws before giving up")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="liepoisson", description="Complete commutative families on duals of Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="structure, index and l of an algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("shift", parents=[common], help="argument-shift family of a classical algebra")
    p.add_argument("file")
    p.add_argument("--a", help="shift covector as comma-separated rationals")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("complete", parents=[common], help="construct and certify a complete family")
    p.add_argument("file")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("verify", parents=[common], help="certify a user family")
    p.add_argument("file")
    p.add_argument("family")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", parents=[common], help="shift-family completeness on a coadjoint orbit")
    p.add_argument("file")
    p.add_argument("--xi", required=True, help="covector as comma-separated rationals")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("catalog", parents=[common], help="print a built-in algebra as JSON")
    p.add_argument("name", choices=NAMES)
    p.add_argument("size", type=int, nargs="?", default=0)
    p.set_defaults(func=cmd_catalog)
    return parser


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except JacobiError as exc:
        print(f"Jacobi identity fails: {exc}", file=sys.stderr)
        return EXIT_JACOBI
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LiePoissonError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

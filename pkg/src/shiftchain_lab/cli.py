"""Command-line interface.

Exit codes for ``verify``: 0 a coloring exists, 1 none exists, 2 error.
``check`` uses 0 pass, 1 fail, 2 error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import kernels
from .cnf import decode_model, encode, parse_model, to_dimacs
from .coloring import (
    Mode,
    backtracking_search,
    exhaustive_search,
    greedy_proper_3,
    verify,
)
from .config import load_limits
from .constructions import construct_theorem1
from .core import ShiftChain, edge_bound, union
from .errors import ShiftChainError
from .formats import (
    dumps_coloring,
    dumps_hypergraph,
    dumps_trace,
    read_coloring,
    read_hypergraph,
)
from .hunt import hunt
from .render import RenderConfig, render_svg

EXIT_FOUND, EXIT_NONE, EXIT_ERROR = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_bytes(text.encode())


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def cmd_construct(args, limits) -> int:
    chain, trace = construct_theorem1(args.m, max_m=limits.construct_max_m)
    _emit(dumps_hypergraph(chain), args.out)
    # keep stdout clean when the chain itself goes there
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    stream.write(dumps_trace(trace))
    return 0


def cmd_validate(args, limits) -> int:
    h = read_hypergraph(args.path)
    if not isinstance(h, ShiftChain):
        print(f"ORDEREDHG m={h.m} n={h.n} t={len(h.edges)} shift-chain={'yes' if h.is_shift_chain() else 'no'}")
        return 0
    count, bound, holds = edge_bound(h)
    print(f"SHIFTCHAIN m={h.m} n={h.n} t={count} bound={bound} holds={'yes' if holds else 'no'}")
    return 0


def cmd_verify(args, limits) -> int:
    h = read_hypergraph(args.path)
    mode = Mode(args.mode)
    outcomes = {}
    if args.oracle in ("exhaustive", "both"):
        outcomes["exhaustive"] = exhaustive_search(h, args.k, mode, cap=limits.exhaustive_cap)
    if args.oracle in ("backtrack", "both"):
        outcomes["backtrack"] = backtracking_search(
            h,
            args.k,
            mode,
            parallel=bool(args.workers and args.workers > 1),
            workers=args.workers,
            symmetry_breaking=args.symmetry_breaking,
        )
    for name, out in outcomes.items():
        verdict = "witness" if out.found else "none"
        print(f"{name}: {verdict} nodes={out.nodes_explored} mode={mode.value} k={args.k} backend={kernels.BACKEND}")
    verdicts = {out.found for out in outcomes.values()}
    if len(verdicts) != 1:
        print("error: oracles disagree", file=sys.stderr)
        return EXIT_ERROR
    found = verdicts.pop()
    if found:
        witness = next(o.witness for o in outcomes.values())
        if args.witness_out:
            _emit(dumps_coloring(witness), args.witness_out)
        else:
            print("witness: " + " ".join(map(str, witness.colors)))
    return EXIT_FOUND if found else EXIT_NONE


def cmd_color(args, limits) -> int:
    h = read_hypergraph(args.path)
    if not isinstance(h, ShiftChain):
        raise ShiftChainError("color needs a SHIFTCHAIN file")
    c = greedy_proper_3(h)
    _emit(dumps_coloring(c), args.out)
    return 0


def cmd_check(args, limits) -> int:
    h = read_hypergraph(args.instance)
    c = read_coloring(args.coloring)
    ok = verify(h, c, Mode(args.mode))
    print(f"{args.mode}: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def cmd_encode(args, limits) -> int:
    h = read_hypergraph(args.path)
    _emit(to_dimacs(encode(h, args.k, Mode(args.mode))), args.out)
    return 0


def cmd_decode(args, limits) -> int:
    c = decode_model(parse_model(Path(args.model).read_text()), args.n, args.k)
    _emit(dumps_coloring(c), args.out)
    return 0


def cmd_hunt(args, limits) -> int:
    report = hunt(
        args.m,
        args.n_range,
        args.edges_range,
        seed=args.seed,
        budget=args.budget,
        strategy=args.strategy,
        exhaustive_cap=limits.exhaustive_cap,
        max_n=limits.enumerate_max_n,
        workers=args.workers,
    )
    data = report.to_dict()
    v = data["verdicts"]
    print(
        f"tested={data['instances_tested']} colorable={v['colorable']} "
        f"not_colorable={v['not_colorable']} unconfirmed={v['unconfirmed']}"
    )
    for i, cx in enumerate(report.counterexamples):
        print(f"certified instance {i}: n={cx.chain.n} t={len(cx.chain.edges)}")
        if args.save_dir:
            Path(args.save_dir).mkdir(parents=True, exist_ok=True)
            _emit(dumps_hypergraph(cx.chain), str(Path(args.save_dir) / f"hunt_{i:04d}.chain"))
    if args.report:
        _emit(json.dumps(data, indent=2) + "\n", args.report)
    return 0


def cmd_render(args, limits) -> int:
    h = read_hypergraph(args.path)
    c = read_coloring(args.coloring) if args.coloring else None
    highlight = set()
    if args.highlight_monochromatic and c is not None:
        highlight = {i for i, e in enumerate(h.edges) if len({c[v] for v in e}) == 1}
    cfg = RenderConfig(highlight=frozenset(highlight), labels=args.labels)
    _emit(render_svg(h, c, cfg), args.out)
    return 0


def cmd_union(args, limits) -> int:
    u = union(read_hypergraph(args.first), read_hypergraph(args.second))
    _emit(dumps_hypergraph(u), args.out)
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    stream.write(f"shift-chain: {'yes' if u.is_shift_chain() else 'no'}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftchain-lab", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key=value file overriding size caps")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    s = sub.add_parser("construct", help="write the recursive chain H_m without polychromatic 3-colorings")
    s.add_argument("m", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("validate", help="parse and validate an instance file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("verify", help="decide k-colorability (exit 0 witness, 1 none, 2 error)")
    s.add_argument("path")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=modes, required=True)
    s.add_argument("--oracle", choices=["exhaustive", "backtrack", "both"], default="backtrack")
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--symmetry-breaking", action="store_true")
    s.add_argument("--witness-out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("color", help="greedy proper 3-coloring")
    s.add_argument("path")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("check", help="verify a coloring file (exit 0 pass, 1 fail)")
    s.add_argument("instance")
    s.add_argument("coloring")
    s.add_argument("--mode", choices=modes, default="proper")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("encode", help="DIMACS CNF for k-colorability")
    s.add_argument("path")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=modes, required=True)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="turn a SAT model into a coloring")
    s.add_argument("model")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("hunt", help="look for shift-chains without a proper 2-coloring")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n-range", type=_range, required=True, metavar="LO:HI")
    s.add_argument("--edges-range", type=_range, required=True, metavar="LO:HI")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=100)
    s.add_argument("--strategy", choices=["random", "enumerate"], default="random")
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--report", help="write the JSON report here")
    s.add_argument("--save-dir", help="write certified instances here")
    s.set_defaults(func=cmd_hunt)

    s = sub.add_parser("render", help="SVG drawing, vertices as columns")
    s.add_argument("path")
    s.add_argument("--coloring")
    s.add_argument("--highlight-monochromatic", action="store_true")
    s.add_argument("--labels", action="store_true")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("union", help="union of two instances on the same vertex set")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_union)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        limits = load_limits(args.config)
        return args.func(args, limits)
    except (ShiftChainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

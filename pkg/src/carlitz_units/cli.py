"""Command-line front end.

Exit codes:
    0  success
    1  verify: some invariant failed
    2  invalid config (parse error, q = 2 with deg P = 1, reducible prime, bad generator)
    3  decompose: element is not a unit
    4  decompose: norm is not 1; dlog: argument not coprime to P
    5  decompose/dlog: element text does not parse
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from .errors import CarlitzError, NotAUnit, NotCoprime, NotNormOne, ParseError
from .poly import discrete_log
from .ring import CycContext
from .textio import (
    RunConfig,
    format_decomposition,
    format_element,
    format_poly,
    human_poly,
    human_xpoly,
    parse_element,
    parse_poly,
)
from .units import decompose, gen_norm1_unit, recompose
from .verify import format_report, run_battery

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NOT_UNIT, EXIT_NORM, EXIT_PARSE = 0, 1, 2, 3, 4, 5


class _ConfigError(Exception):
    pass


def _load(args) -> tuple[RunConfig, CycContext]:
    try:
        cfg = RunConfig.from_file(args.config)
        if getattr(args, "seed", None) is not None:
            cfg.seed = args.seed
        if getattr(args, "trials", None) is not None:
            cfg.trials = args.trials
        return cfg, cfg.context()
    except OSError as exc:
        raise _ConfigError(f"cannot read config: {exc}") from None
    except (CarlitzError, ValueError) as exc:
        raise _ConfigError(f"invalid config: {type(exc).__name__}: {exc}") from None


def cmd_setup(args, out) -> int:
    _, ctx = _load(args)
    F = ctx.F
    print(f"q={ctx.q} p={F.p} k={F.k}", file=out)
    print(f"prime={human_poly(ctx.prime, F)} {format_poly(ctx.prime, F)}", file=out)
    print(f"d={ctx.d} n={ctx.n}", file=out)
    print(f"Psi={human_xpoly(ctx.psi, F)}", file=out)
    print(f"g={human_poly(ctx.g, F)} {format_poly(ctx.g, F)}", file=out)
    ok = ctx.psi[0] == ctx.prime
    print(f"Psi(0)=prime: {'OK' if ok else 'FAIL'}", file=out)
    print(f"RESULT pass={int(ok)} fail={int(not ok)}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args, out) -> int:
    _, ctx = _load(args)
    if args.element is None:
        print("error: --element is required", file=sys.stderr)
        return EXIT_PARSE
    try:
        eps = parse_element(args.element, ctx)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        dec = decompose(eps)
    except NotAUnit as exc:
        print(f"error: not a unit: {exc}", file=sys.stderr)
        return EXIT_NOT_UNIT
    except NotNormOne as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORM
    print(format_decomposition(dec, ctx), file=out)
    ok = recompose(dec, ctx) == eps
    print(f"recomposition: {'OK' if ok else 'FAIL'}", file=out)
    print(f"RESULT pass={int(ok)} fail={int(not ok)}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    cfg, ctx = _load(args)
    if cfg.trials < 1:
        print("error: trials must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    t0 = time.perf_counter()
    results = run_battery(ctx, cfg.trials, cfg.seed)
    print(f"context q={ctx.q} prime={format_poly(ctx.prime, ctx.F)} n={ctx.n} seed={cfg.seed} trials={cfg.trials}", file=out)
    print(format_report(results), file=out)
    print(f"elapsed={time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_dlog(args, out) -> int:
    _, ctx = _load(args)
    if args.element is None:
        print("error: --element is required", file=sys.stderr)
        return EXIT_PARSE
    try:
        a = parse_poly(args.element, ctx.F)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        h = discrete_log(ctx.residues, ctx.g, a)
    except NotCoprime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORM
    print(h, file=out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    cfg, ctx = _load(args)
    count = args.trials if args.trials is not None else 1
    for i in range(count):
        print(format_element(gen_norm1_unit(cfg.seed + i, ctx)), file=out)
    return EXIT_OK


COMMANDS = {
    "setup": cmd_setup,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "dlog": cmd_dlog,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carlitz-units",
        description="Norm-one units of Carlitz cyclotomic rings: setup, decomposition, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "setup": "build the context and print q, d, n, Psi and g",
        "decompose": "factor a norm-one unit as u^ell * Q(lambda)/Q(sigma(lambda))",
        "verify": "run the seeded invariant battery",
        "dlog": "discrete log of an element of A modulo P to base g",
        "gen": "emit seeded norm-one units (one per line; --trials sets the count)",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", required=True, help="flat key = value config file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--element", default=None, help="element text (ring element or element of A for dlog)")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except _ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run setup and the invariant battery on every config in configs/.

    python3 scripts/run_reference_contexts.py [--trials N] [--seed S]

Prints each report and a final table; exits nonzero if any context fails.
"""

import argparse
import io
import sys
import time
from pathlib import Path

from carlitz_units.cli import main as cli_main

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=None, help="override the per-config trial count")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--configs", type=Path, default=ROOT / "configs")
    args = ap.parse_args()

    rows = []
    for cfg in sorted(args.configs.glob("*.cfg")):
        if cfg.name.startswith("invalid"):
            continue
        extra = []
        if args.trials is not None:
            extra += ["--trials", str(args.trials)]
        if args.seed is not None:
            extra += ["--seed", str(args.seed)]
        buf = io.StringIO()
        t0 = time.perf_counter()
        code = cli_main(["setup", "--config", str(cfg)], out=buf)
        if code == 0:
            code = cli_main(["verify", "--config", str(cfg), *extra], out=buf)
        dt = time.perf_counter() - t0
        print(f"### {cfg.name}\n{buf.getvalue()}")
        rows.append((cfg.name, code, dt))

    print(f"{'config':<22} {'exit':>4} {'seconds':>8}")
    for name, code, dt in rows:
        print(f"{name:<22} {code:>4} {dt:>8.2f}")
    return 0 if all(code == 0 for _, code, _ in rows) else 1


if __name__ == "__main__":
    sys.exit(main())

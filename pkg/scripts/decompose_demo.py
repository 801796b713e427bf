#!/usr/bin/env python3
"""Decompose a few seeded norm-one units and show the factorization pieces.

    python3 scripts/decompose_demo.py [--config configs/f2_T3T1.cfg] [--count 5]
"""

import argparse
from pathlib import Path

from carlitz_units.ring import galois_apply
from carlitz_units.textio import RunConfig, format_element, human_xpoly
from carlitz_units.units import cyclotomic_unit, decompose, gen_norm1_unit, recompose

ROOT = Path(__file__).resolve().parent.parent

ap = argparse.ArgumentParser()
ap.add_argument("--config", type=Path, default=ROOT / "configs" / "f2_T3T1.cfg")
ap.add_argument("--count", type=int, default=5)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

cfg = RunConfig.from_file(args.config)
ctx = cfg.context()
print(f"q={ctx.q} n={ctx.n} Psi = {human_xpoly(ctx.psi, ctx.F)}")
print(f"u = {format_element(cyclotomic_unit(ctx))}")
for s in range(args.seed, args.seed + args.count):
    eps = gen_norm1_unit(s, ctx)
    d = decompose(eps)
    w = d.witness
    print(f"\nseed {s}: eps = {format_element(eps)}")
    print(f"  ell = {d.ell}")
    print(f"  Q(x) = {human_xpoly(d.Q, ctx.F)}")
    print(f"  kappa = w / sigma(w): {d.kappa * galois_apply(w) == w}")
    print(f"  recompose == eps: {recompose(d, ctx) == eps}")

"""Seeded invariant battery over one context.

Each check returns a :class:`CheckResult`; the first failing case is kept in
serialized form so a run can be reproduced from its report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .carlitz import carlitz_poly
from .errors import CarlitzError
from .ring import (
    CycContext,
    RingElem,
    galois_apply,
    norm,
    norm_resultant,
    reduce,
    ring_inverse,
)
from .textio import format_element
from .units import (
    capital_lambda,
    cyclotomic_unit,
    decompose,
    ell_invariant,
    gen_norm1_unit,
    gen_unit,
    in_g_criterion,
    lambda_partial,
    unit_witness,
    unit_witness_trace,
)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, ok: bool, detail: Callable[[], str] = lambda: ""):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = detail()


def random_element(rng: random.Random, ctx: CycContext, max_deg: int = 2) -> RingElem:
    A = ctx.A
    coeffs = [A.make(rng.randrange(ctx.q) for _ in range(rng.randint(0, max_deg + 1))) for _ in range(ctx.n)]
    return RingElem._raw(ctx, coeffs)


def permuted_order(ctx: CycContext, seed: int) -> list[int]:
    order = list(range(ctx.n))
    random.Random(seed).shuffle(order)
    if order == list(range(ctx.n)):
        order.reverse()
    return order


def sigma_power_of_lambda(e: int, ctx: CycContext) -> RingElem:
    """C_{g^e}(lambda), with g^e reduced mod P first (C_P kills lambda)."""
    ge = ctx.residues.pow(ctx.g, e)
    return reduce(carlitz_poly(ctx.A, ge), ctx)


def check_sigma_generates(ctx: CycContext) -> CheckResult:
    res = CheckResult("sigma_generates")
    cur = ctx.lam
    for e in range(ctx.n + 1):
        res.record(cur == sigma_power_of_lambda(e, ctx), lambda: f"e={e}")
        cur = galois_apply(cur)
    return res


def check_partial_lambda(ctx: CycContext) -> CheckResult:
    """u^ell * Lambda_ell * C_{g^ell}(lambda) = lambda for ell in [2, n]."""
    res = CheckResult("partial_lambda_identity")
    u = cyclotomic_unit(ctx)
    for ell in range(2, ctx.n + 1):
        lhs = u**ell * lambda_partial(ell, ctx) * sigma_power_of_lambda(ell, ctx)
        res.record(lhs == ctx.lam, lambda: f"ell={ell}")
    return res


def check_lambda_closed_form(ctx: CycContext) -> CheckResult:
    res = CheckResult("lambda_closed_form")
    try:
        L = capital_lambda(ctx)
        ok = L * cyclotomic_unit(ctx) ** ctx.n == ctx.one and in_g_criterion(L)
    except CarlitzError as exc:
        ok, L = False, exc
    res.record(ok, lambda: repr(L))
    return res


def _safe(fn: Callable[[], bool]) -> bool:
    try:
        return fn()
    except (CarlitzError, AssertionError):
        return False


def run_battery(ctx: CycContext, trials: int, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    n = ctx.n
    results = [check_sigma_generates(ctx), check_partial_lambda(ctx), check_lambda_closed_form(ctx)]

    norm_mult = CheckResult("norm_multiplicative")
    norm_oracle = CheckResult("norm_resultant_oracle")
    round_trip = CheckResult("decompose_round_trip")
    unique = CheckResult("uniqueness_permuted_resolvent")
    beta_hyp = CheckResult("beta_unit_hypotheses")
    cob_fwd = CheckResult("coboundary_forward")
    cob_rev = CheckResult("coboundary_reverse")
    ell_hom = CheckResult("ell_homomorphism")

    ell_hom.record(_safe(lambda: ell_invariant(cyclotomic_unit(ctx)) == 1), lambda: "ell(u) != 1")

    A = ctx.A
    for t in range(trials):
        s = seed * 1_000_003 + t
        a, b = random_element(rng, ctx), random_element(rng, ctx)
        norm_mult.record(
            _safe(lambda: norm(a * b) == A.mul(norm(a), norm(b))),
            lambda: f"a={format_element(a)} b={format_element(b)}",
        )
        norm_oracle.record(_safe(lambda: norm(a) == norm_resultant(a)), lambda: f"a={format_element(a)}")

        eps = gen_norm1_unit(s, ctx)
        detail = lambda: f"seed={s} eps={format_element(eps)}"
        try:
            dec = decompose(eps)
            round_trip.record(True)
            dec2 = decompose(eps, order=permuted_order(ctx, s))
            unique.record(dec.ell == dec2.ell and dec.Q == dec2.Q, detail)
        except (CarlitzError, AssertionError):
            round_trip.record(False, detail)
            continue

        try:
            tr = unit_witness_trace(dec.kappa, check=False)
            beta_hyp.record(tr.beta_hypotheses_ok and tr.beta_is_unit, detail)
        except (CarlitzError, AssertionError):
            beta_hyp.record(False, detail)

        crit = in_g_criterion(eps)

        def reverse_ok() -> bool:
            if crit != (dec.ell == 0):
                return False
            if crit:
                w = unit_witness(eps, check=False)
                return eps * galois_apply(w) == w
            return True

        cob_rev.record(_safe(reverse_ok), detail)

        beta = gen_unit(s, ctx) if t % 2 else gen_norm1_unit(s + 7, ctx)

        def forward_ok() -> bool:
            kappa = beta * ring_inverse(galois_apply(beta))
            if not in_g_criterion(kappa):
                return False
            w = unit_witness(kappa)
            return kappa * galois_apply(w) == w

        cob_fwd.record(_safe(forward_ok), lambda: f"seed={s} beta={format_element(beta)}")

        other = gen_norm1_unit(s + 13, ctx)
        ell_hom.record(
            _safe(lambda: ell_invariant(eps * other) == (dec.ell + ell_invariant(other)) % n),
            lambda: f"seed={s}",
        )

    results += [norm_mult, norm_oracle, round_trip, unique, beta_hyp, cob_fwd, cob_rev, ell_hom]
    return results


def format_report(results: Iterable[CheckResult]) -> str:
    results = list(results)
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name} pass={r.passed} fail={r.failed}")
        if r.counterexample:
            lines.append(f"  counterexample: {r.counterexample}")
    npass = sum(r.ok for r in results)
    lines.append(f"RESULT pass={npass} fail={len(results) - npass}")
    return "\n".join(lines)

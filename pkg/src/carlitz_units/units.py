"""Norm-one units of O and their canonical factorization.

Every norm-one unit eps of O factors uniquely as

    eps = u^ell * Q(lambda) / Q(C_g(lambda)),   0 <= ell < n,

where u = lambda / C_g(lambda) is the cyclotomic unit and Q(lambda) is a unit
(Q unique up to F_q^x).  The exponent ell is read off from the constant term:
u = g^{-1} mod lambda and quotients of conjugates are 1 mod lambda, so
P_eps(0) = g^{-ell} mod P.  The unit Q(lambda) is then built by solving the
Hilbert 90 equation kappa = delta / sigma(delta), stripping the lambda-power
and the content from delta, and folding the leftover power of u back in with
Lambda = u^{-n}, itself a quotient of conjugate units.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import xpoly
from .carlitz import carlitz_poly
from .errors import (
    InvariantViolation,
    LambdaMismatch,
    NotAUnit,
    NotInG,
    NotNormOne,
    ResolventVanished,
    WitnessNotUnit,
)
from .poly import Poly, discrete_log
from .ring import (
    CycContext,
    RingElem,
    content_normalize,
    conjugates,
    galois_apply,
    is_unit,
    lambda_valuation,
    unit_hypotheses_check,
    norm,
    reduce,
    ring_inverse,
)
from .xpoly import XPoly


@dataclass(frozen=True)
class UnitDecomposition:
    ell: int
    Q: XPoly
    witness: RingElem
    kappa: RingElem


@dataclass(frozen=True)
class CocycleWitness:
    delta: RingElem
    is_unit_witness: bool


@dataclass(frozen=True)
class WitnessTrace:
    """Intermediate values of one :func:`unit_witness` run."""

    delta: RingElem
    valuation: int
    eta: RingElem
    content: Poly
    beta: RingElem
    beta_hypotheses_ok: bool
    beta_is_unit: bool
    witness: RingElem


# -- the cyclotomic unit and its relatives --------------------------------------


@functools.cache
def cg_over_lambda(ctx: CycContext) -> RingElem:
    """C_g(lambda) / lambda = u^{-1}, computed as the polynomial C_g(x)/x."""
    return reduce(xpoly.divide_by_x(carlitz_poly(ctx.A, ctx.g)), ctx)


@functools.cache
def cyclotomic_unit(ctx: CycContext) -> RingElem:
    """u = lambda / C_g(lambda)."""
    u = ring_inverse(cg_over_lambda(ctx))
    if u * ctx.sigma_g_image != ctx.lam:
        raise InvariantViolation("u * C_g(lambda) != lambda")
    return u


@functools.cache
def _u_conjugates(ctx: CycContext) -> tuple[RingElem, ...]:
    return tuple(conjugates(cyclotomic_unit(ctx)))


@functools.cache
def _u_inverse_conjugates(ctx: CycContext) -> tuple[RingElem, ...]:
    return tuple(conjugates(cg_over_lambda(ctx)))


def rho(e: int, ctx: CycContext) -> RingElem:
    """rho_e = sigma^{e-1}(lambda) / sigma^e(lambda) = sigma^{e-1}(u), e >= 1."""
    if e < 1:
        raise ValueError("rho_e is defined for e >= 1")
    return _u_conjugates(ctx)[(e - 1) % ctx.n]


def _rho_inv(e: int, ctx: CycContext) -> RingElem:
    return _u_inverse_conjugates(ctx)[(e - 1) % ctx.n]


def lambda_partial(ell: int, ctx: CycContext) -> RingElem:
    """prod_{h=2}^{ell} prod_{e=2}^{h} rho_e / rho_{e-1}, evaluated literally."""
    acc = ctx.one
    for h in range(2, ell + 1):
        for e in range(2, h + 1):
            acc = acc * rho(e, ctx) * _rho_inv(e - 1, ctx)
    return acc


@functools.cache
def capital_lambda(ctx: CycContext) -> RingElem:
    """Lambda_P from the double product at ell = n, checked against u^{1 - q^d}."""
    double = lambda_partial(ctx.n, ctx)
    closed = cg_over_lambda(ctx) ** (ctx.q**ctx.d - 1)
    if double != closed:
        raise LambdaMismatch("double-product Lambda differs from u^(1 - q^d)")
    return double


@functools.cache
def _lambda_coboundary(ctx: CycContext) -> RingElem:
    """Y with Lambda^{-1} = Y / sigma(Y).

    rho_h / rho_1 = sigma^{h-1}(u) / u = sigma(y) / y for y = prod_{j<h-1}
    sigma^j(u), so Lambda = prod_h sigma(y_h)/y_h and Y = prod_h y_h.
    """
    uc = _u_conjugates(ctx)
    Y = ctx.one
    y = ctx.one
    for k in range(1, ctx.n):
        y = y * uc[k - 1]
        Y = Y * y
    return Y


def lambda_g_witness(h: int, ctx: CycContext) -> RingElem:
    """A unit w with Lambda^{-h} = w / sigma(w)."""
    if h == 0:
        return ctx.one
    Y = _lambda_coboundary(ctx)
    w = Y**h if h > 0 else ring_inverse(Y) ** (-h)
    lam_pow = capital_lambda(ctx) ** (-h) if h < 0 else ring_inverse(capital_lambda(ctx)) ** h
    if lam_pow * galois_apply(w) != w:
        raise InvariantViolation("Lambda^-h * sigma(w) != w")
    return w


# -- Hilbert 90 and the witness pipeline ---------------------------------------


def _check_norm_one(eps: RingElem) -> None:
    if not eps:
        raise NotAUnit("0 is not a unit")
    nrm = norm(eps)
    if len(nrm) != 1:
        raise NotAUnit("element has non-constant norm")
    if nrm != eps.ctx.A.one:
        raise NotNormOne(f"norm is {list(nrm)}, not 1")


def in_g_criterion(eps: RingElem) -> bool:
    """P_eps(0) = 1 mod P."""
    ctx = eps.ctx
    return ctx.residues.reduce(eps.constant_term) == ctx.A.one


def hilbert90_resolvent(
    kappa: RingElem, order: Optional[Sequence[int]] = None, check: bool = True
) -> CocycleWitness:
    """Nonzero delta with kappa * sigma(delta) = delta, for a norm-one kappa.

    delta = sum_e c_e sigma^e(theta), c_0 = 1, c_{e+1} = kappa sigma(c_e); the
    basis elements theta = lambda^t are tried in ``order`` (default 0..n-1).
    """
    ctx = kappa.ctx
    if check:
        _check_norm_one(kappa)
    n = ctx.n
    cs = [ctx.one]
    for _ in range(n - 1):
        cs.append(kappa * galois_apply(cs[-1]))
    for t in order if order is not None else range(n):
        theta = ctx.lam ** t
        delta = ctx.zero
        for c, conj in zip(cs, conjugates(theta)):
            delta = delta + c * conj
        if delta:
            if kappa * galois_apply(delta) != delta:
                raise InvariantViolation("resolvent fails kappa * sigma(delta) = delta")
            return CocycleWitness(delta, is_unit(delta))
    raise ResolventVanished("every basis element gave a vanishing resolvent")


def unit_witness_trace(
    kappa: RingElem, order: Optional[Sequence[int]] = None, check: bool = True
) -> WitnessTrace:
    ctx = kappa.ctx
    if check:
        _check_norm_one(kappa)
    if not in_g_criterion(kappa):
        raise NotInG("P_kappa(0) is not 1 mod P; kappa has nonzero ell-invariant")
    delta = hilbert90_resolvent(kappa, order, check=False).delta
    e, eta = lambda_valuation(delta)
    c, beta = content_normalize(eta)
    hyp_ok = unit_hypotheses_check(beta)
    if not hyp_ok:
        raise InvariantViolation("beta violates gcd(P_beta(0), P) = 1 or content 1")
    beta_unit = is_unit(beta)
    if not beta_unit:
        raise InvariantViolation("beta satisfies the unit criterion but is not a unit")
    if e % ctx.n:
        raise InvariantViolation(f"lambda-valuation {e} of delta is not a multiple of n = {ctx.n}")
    # kappa = u^e * beta/sigma(beta) and u^{kn} = Lambda^{-k}.
    w = lambda_g_witness(e // ctx.n, ctx) * beta
    if kappa * galois_apply(w) != w:
        raise InvariantViolation("witness w fails kappa = w / sigma(w)")
    return WitnessTrace(delta, e, eta, c, beta, hyp_ok, beta_unit, w)


def unit_witness(
    kappa: RingElem, order: Optional[Sequence[int]] = None, check: bool = True
) -> RingElem:
    """A unit w with kappa = w / sigma(w), for kappa in G_P."""
    return unit_witness_trace(kappa, order, check).witness


def normalize_scalar(w: RingElem) -> RingElem:
    """Scale by F_q^x so the lowest nonzero coefficient of P_w is monic."""
    A = w.ctx.A
    lead = next(c for c in w.coeffs if c)
    if lead[-1] == 1:
        return w
    return w.scale(A.const(w.ctx.F.inv(lead[-1])))


# -- decomposition ---------------------------------------------------------------


def ell_invariant(eps: RingElem) -> int:
    """ell = -dlog_g(P_eps(0) mod P) mod n."""
    ctx = eps.ctx
    h = discrete_log(ctx.residues, ctx.g, eps.constant_term)
    return (-h) % ctx.n


def decompose(
    eps: RingElem, order: Optional[Sequence[int]] = None, check: bool = True
) -> UnitDecomposition:
    ctx = eps.ctx
    if check:
        _check_norm_one(eps)
    ell = ell_invariant(eps)
    kappa = eps * cg_over_lambda(ctx) ** ell
    if not in_g_criterion(kappa):
        raise InvariantViolation("eps * u^-ell is not 1 mod P")
    w = normalize_scalar(unit_witness(kappa, order, check=False))
    dec = UnitDecomposition(ell, w.poly, w, kappa)
    if recompose(dec, ctx) != eps:
        raise InvariantViolation("recomposition does not reproduce eps")
    return dec


def recompose(dec: UnitDecomposition, ctx: CycContext) -> RingElem:
    """u^ell * Q(lambda) / Q(C_g(lambda))."""
    w = reduce(dec.Q, ctx)
    if not is_unit(w):
        raise WitnessNotUnit("Q(lambda) is not a unit")
    return cyclotomic_unit(ctx) ** dec.ell * w * ring_inverse(galois_apply(w))


def is_conjugate_unit_quotient(eps: RingElem, check: bool = True) -> bool:
    if check:
        _check_norm_one(eps)
    return in_g_criterion(eps)


# -- test inputs -------------------------------------------------------------------


def gen_norm1_unit(
    seed: int, ctx: CycContext, max_factors: int = 3, max_exp: int = 2, check: bool = True
) -> RingElem:
    """c * prod_i sigma^{a_i}(u)^{b_i} with seeded random c, a_i, b_i."""
    rng = random.Random(seed)
    c = rng.randrange(1, ctx.q)
    eps = ctx.const(ctx.A.const(c))
    uc, uic = _u_conjugates(ctx), _u_inverse_conjugates(ctx)
    for _ in range(rng.randint(0, max_factors)):
        a = rng.randrange(ctx.n)
        b = rng.randint(-max_exp, max_exp)
        base = uc[a] if b >= 0 else uic[a]
        eps = eps * base ** abs(b)
    # c^n = 1 because (q - 1) | n
    if check and norm(eps) != ctx.A.one:
        raise InvariantViolation("generated unit does not have norm 1")
    return eps


def gen_unit(seed: int, ctx: CycContext) -> RingElem:
    """A seeded unit that need not lie in the cyclotomic-unit subgroup generated by
    conjugates of u alone: products of C_a(lambda)/lambda for random a coprime to P."""
    rng = random.Random(seed)
    A = ctx.A
    eps = ctx.const(A.const(rng.randrange(1, ctx.q)))
    for _ in range(rng.randint(1, 2)):
        while True:
            a = A.make(rng.randrange(ctx.q) for _ in range(rng.randint(1, ctx.d + 1)))
            if a and ctx.residues.reduce(a):
                break
        z = reduce(xpoly.divide_by_x(carlitz_poly(A, a)), ctx)
        eps = eps * z ** rng.randint(1, 2)
    return eps

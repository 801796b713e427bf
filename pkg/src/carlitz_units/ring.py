"""The ring of integers O = A[lambda] of the P-th cyclotomic function field.

O is realized as A[x]/(Psi_P(x)).  An element is stored as its unique
representing polynomial of x-degree <= n - 1 (n = q^d - 1), padded to exactly
n coefficients.  Coefficients are genuine elements of A and are never reduced
modulo P.

The Galois group is cyclic of order n, generated by sigma: lambda -> C_g(lambda)
for a primitive root g mod P.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import xpoly
from .carlitz import carlitz_poly, cyclotomic_poly
from .errors import (
    ContextMismatch,
    NormNotInBase,
    NotAUnit,
    NotGenerator,
    NotPrime,
    StarViolated,
    ZeroElement,
)
from .fq import FieldSpec
from .poly import Poly, PolyRing, ResidueCtx, find_primitive_root, make_residue_ctx
from .xpoly import XPoly


@dataclass(eq=False)
class CycContext:
    """Fixed data for one field K_P.  Treat as immutable; build with
    :func:`make_context`."""

    F: FieldSpec
    A: PolyRing
    prime: Poly
    n: int
    psi: XPoly
    g: Poly
    residues: ResidueCtx
    sigma_g_image: "RingElem" = field(init=False, repr=False)
    star_ok: bool = True

    @property
    def d(self) -> int:
        return len(self.prime) - 1

    @property
    def q(self) -> int:
        return self.F.q

    @property
    def fingerprint(self) -> tuple:
        return (self.F.p, self.F.k, self.F.modulus, self.prime, self.g)

    def __repr__(self):
        return f"CycContext(q={self.q}, prime={list(self.prime)}, g={list(self.g)}, n={self.n})"

    # -- constructors for elements ----------------------------------------

    def element(self, coeffs: Iterable[Poly]) -> "RingElem":
        """Element from a representing polynomial of any x-degree."""
        return reduce(xpoly.trim(coeffs), self)

    def const(self, c: Poly) -> "RingElem":
        return RingElem._raw(self, (tuple(c),))

    @functools.cached_property
    def one(self) -> "RingElem":
        return self.const(self.A.one)

    @functools.cached_property
    def zero(self) -> "RingElem":
        return RingElem._raw(self, ())

    @functools.cached_property
    def lam(self) -> "RingElem":
        """lambda itself: the class of x."""
        return self.element(((), self.A.one))

    # -- precomputed reduction and Galois data ----------------------------

    @functools.cached_property
    def _psi_tail(self) -> list[tuple[int, Poly]]:
        # x^n = -sum_j psi_j x^j; keep the nonzero j only (psi is sparse).
        A = self.A
        return [(j, A.neg(c)) for j, c in enumerate(self.psi[:-1]) if c]

    @functools.cached_property
    def psi_over_x(self) -> XPoly:
        """R(x) with Psi(x) = x R(x) + P."""
        return self.psi[1:]

    @functools.cached_property
    def sigma_matrix(self) -> tuple[tuple[Poly, ...], ...]:
        """Column j is sigma(lambda^j) in canonical coordinates."""
        cols = [self.one.coeffs]
        img = self.sigma_g_image
        cur = self.one
        for _ in range(1, self.n):
            cur = cur * img
            cols.append(cur.coeffs)
        return tuple(cols)


@dataclass(frozen=True, eq=False)
class RingElem:
    """An element of O in canonical form; ``coeffs`` has length exactly n."""

    ctx: CycContext = field(repr=False)
    coeffs: tuple[Poly, ...]

    @classmethod
    def _raw(cls, ctx: CycContext, coeffs: Sequence[Poly]) -> "RingElem":
        coeffs = tuple(coeffs)
        pad = ctx.n - len(coeffs)
        return cls(ctx, coeffs + ((),) * pad if pad > 0 else coeffs)

    def __repr__(self):
        return f"RingElem({[list(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ctx.fingerprint == other.ctx.fingerprint

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other: "RingElem"):
        if self.ctx is not other.ctx and self.ctx.fingerprint != other.ctx.fingerprint:
            raise ContextMismatch("elements belong to different cyclotomic contexts")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        A = self.ctx.A
        return RingElem(self.ctx, tuple(A.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElem":
        A = self.ctx.A
        return RingElem(self.ctx, tuple(A.neg(a) for a in self.coeffs))

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            return ring_mul(self, other)
        return NotImplemented

    def __pow__(self, e: int) -> "RingElem":
        if e < 0:
            return ring_inverse(self) ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Poly) -> "RingElem":
        """Multiply by an element of A."""
        A = self.ctx.A
        return RingElem(self.ctx, tuple(A.mul(a, c) for a in self.coeffs))

    @property
    def constant_term(self) -> Poly:
        """P_alpha(0)."""
        return self.coeffs[0]

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def poly(self) -> XPoly:
        """The representing polynomial P_alpha, trimmed."""
        return xpoly.trim(self.coeffs)

    def max_degree(self) -> int:
        """Largest T-degree among the coefficients (-1 for zero)."""
        return max(len(c) for c in self.coeffs) - 1


def make_context(F: FieldSpec, prime: Sequence[int], g: Optional[Sequence[int]] = None) -> CycContext:
    A = PolyRing(F)
    prime = A.make(prime)
    if len(prime) < 2 or not A.is_monic(prime) or not A.is_irreducible(prime):
        raise NotPrime(f"{list(prime)} is not a monic irreducible polynomial of positive degree")
    d = len(prime) - 1
    if F.q == 2 and d == 1:
        raise StarViolated("assumption (q > 2 or deg P > 1) fails: q = 2 and deg P = 1")
    residues = make_residue_ctx(A, prime)
    if g is None:
        g = find_primitive_root(residues)
    else:
        g = residues.reduce(A.make(g))
        if not residues.is_generator(g):
            raise NotGenerator(f"{list(g)} is not a primitive root modulo {list(prime)}")
    psi = cyclotomic_poly(A, prime, 1)
    n = F.q**d - 1
    assert len(psi) - 1 == n and psi[0] == prime
    ctx = CycContext(F, A, prime, n, psi, g, residues)
    ctx.sigma_g_image = reduce(carlitz_poly(A, g), ctx)
    return ctx


def reduce(P: XPoly, ctx: CycContext) -> RingElem:
    """P mod Psi in canonical form."""
    n = ctx.n
    if len(P) <= n:
        return RingElem._raw(ctx, P)
    A = ctx.A
    tail = ctx._psi_tail
    r = list(P)
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c:
            base = i - n
            for j, t in tail:
                r[base + j] = A.add(r[base + j], A.mul(c, t))
    return RingElem._raw(ctx, r[:n])


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    a._check(b)
    ctx = a.ctx
    if not a or not b:
        return ctx.zero
    return reduce(xpoly.mul(ctx.A, a.poly, b.poly), ctx)


def _sigma_once(a: RingElem) -> RingElem:
    ctx = a.ctx
    A = ctx.A
    out: list[Poly] = [()] * ctx.n
    for j, aj in enumerate(a.coeffs):
        if not aj:
            continue
        for i, mij in enumerate(ctx.sigma_matrix[j]):
            if mij:
                out[i] = A.add(out[i], A.mul(aj, mij))
    return RingElem(ctx, tuple(out))


def galois_apply(a: RingElem, e: int = 1) -> RingElem:
    """sigma_g^e(a)."""
    e %= a.ctx.n
    for _ in range(e):
        a = _sigma_once(a)
    return a


def galois_apply_horner(a: RingElem, e: int = 1) -> RingElem:
    """sigma_g^e(a) by Horner evaluation of P_a at sigma(lambda).  Slower; kept
    as the reference for :func:`galois_apply`."""
    ctx = a.ctx
    for _ in range(e % ctx.n):
        img = ctx.sigma_g_image
        acc = ctx.zero
        for c in reversed(a.coeffs):
            acc = acc * img + ctx.const(c)
        a = acc
    return a


def conjugates(a: RingElem) -> list[RingElem]:
    """[a, sigma(a), ..., sigma^{n-1}(a)]."""
    out = [a]
    for _ in range(a.ctx.n - 1):
        out.append(_sigma_once(out[-1]))
    return out


def _product(xs: Iterable[RingElem], ctx: CycContext) -> RingElem:
    acc = ctx.one
    for x in xs:
        acc = acc * x
    return acc


def _as_base(x: RingElem) -> Poly:
    if not x.is_constant():
        raise NormNotInBase("product of all conjugates has a nonzero lambda-component")
    return x.constant_term


def norm(a: RingElem) -> Poly:
    """prod_{e=0}^{n-1} sigma^e(a), an element of A."""
    return _as_base(_product(conjugates(a), a.ctx))


def is_unit(a: RingElem) -> bool:
    if not a:
        return False
    return len(norm(a)) == 1


def ring_inverse(a: RingElem) -> RingElem:
    """a^{-1} = (prod_{e>=1} sigma^e(a)) / Norm(a) for a unit a."""
    ctx = a.ctx
    if not a:
        raise NotAUnit("0 is not a unit")
    rest = _product(conjugates(a)[1:], ctx)
    nrm = _as_base(a * rest)
    if len(nrm) != 1:
        raise NotAUnit("element has non-constant norm")
    return rest.scale(ctx.A.const(ctx.F.inv(nrm[0])))


def norm_resultant(a: RingElem) -> Poly:
    """Res_x(Psi, P_a) by fraction-free elimination on the Sylvester matrix.

    Independent of the Galois action; Psi is monic so this equals the norm.
    """
    ctx = a.ctx
    A = ctx.A
    P = a.poly
    if not P:
        return ()
    if len(P) == 1:
        return A.pow(P[0], ctx.n)
    f, g = ctx.psi, P
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    rows: list[list[Poly]] = []
    for i in range(dg):
        row: list[Poly] = [()] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(df):
        row = [()] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(A, rows)


def bareiss_det(A: PolyRing, M: list[list[Poly]]) -> Poly:
    """Determinant over the integral domain A with exact divisions only."""
    M = [list(r) for r in M]
    size = len(M)
    sign = 1
    prev: Poly = A.one
    for k in range(size - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, size) if M[i][k]), None)
            if swap is None:
                return ()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = A.sub(A.mul(M[i][j], pivot), A.mul(M[i][k], M[k][j]))
                M[i][j] = A.exquo(num, prev)
            M[i][k] = ()
        prev = pivot
    det = M[-1][-1]
    return A.neg(det) if sign < 0 else det


def lambda_valuation(a: RingElem) -> tuple[int, RingElem]:
    """(e, eta) with a = lambda^e * eta and lambda not dividing eta.

    With Psi(x) = x R(x) + P we have P = -lambda R(lambda), so
    b / lambda = -b R(lambda) / P, and lambda | b exactly when every
    coefficient of b R(lambda) is divisible by P in A.
    """
    if not a:
        raise ZeroElement("the valuation of 0 is infinite")
    ctx = a.ctx
    A = ctx.A
    R = reduce(ctx.psi_over_x, ctx)
    e = 0
    while True:
        t = a * R
        quo = []
        for c in t.coeffs:
            qc, r = A.divmod(c, ctx.prime)
            if r:
                return e, a
            quo.append(A.neg(qc))
        a = RingElem(ctx, tuple(quo))
        e += 1


def content_normalize(a: RingElem) -> tuple[Poly, RingElem]:
    """(c, beta) with c the monic content of P_a and P_beta = P_a / c."""
    if not a:
        raise ZeroElement("content of 0 is undefined")
    A = a.ctx.A
    c = A.content(a.coeffs)
    if c == A.one:
        return c, a
    return c, RingElem(a.ctx, tuple(A.exquo(x, c) if x else () for x in a.coeffs))


def unit_hypotheses_check(a: RingElem) -> bool:
    """gcd(P_a(0), P) = 1 and content(P_a) = 1.

    When sigma(a)/a is also a unit, these two conditions force a to be a unit.
    """
    if not a:
        raise ZeroElement("the unit hypotheses need a nonzero element")
    ctx = a.ctx
    A = ctx.A
    c0 = a.constant_term
    coprime = bool(c0) and A.gcd(c0, ctx.prime) == A.one
    return coprime and A.content(a.coeffs) == A.one

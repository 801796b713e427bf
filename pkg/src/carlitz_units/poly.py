"""Dense polynomials in A = F_q[T].

A polynomial is a tuple of field codes, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  All routines live on :class:`PolyRing`
so the field is bound once.  Everything is deterministic: irreducibility and
factoring are plain trial division, which is exact and fast enough when
q^deg stays in the thousands.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BothZero,
    ConstantPolynomial,
    DivisionByZero,
    NonExactDivision,
    NotCoprime,
    NotGenerator,
    NotPrime,
    ZeroPolynomial,
)
from .fq import FieldSpec, factor_int

Poly = tuple[int, ...]

# below this length schoolbook beats packing into big integers
_KRONECKER_MIN = 12


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyRing:
    """The ring F_q[T] over a fixed :class:`FieldSpec`."""

    zero: Poly = ()
    one: Poly = (1,)

    def __init__(self, F: FieldSpec):
        self.F = F
        self.p = F.p
        self.q = F.q
        self._prime = F.k == 1

    def __repr__(self):
        return f"PolyRing({self.F!r})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.F == other.F

    def __hash__(self):
        return hash(("PolyRing", self.F))

    # -- construction -----------------------------------------------------

    def make(self, coeffs: Iterable[int]) -> Poly:
        q = self.q
        return _trim([c % q for c in coeffs])

    def const(self, c: int) -> Poly:
        return (c,) if c else ()

    @property
    def T(self) -> Poly:
        return (0, 1)

    def monomial(self, c: int, n: int) -> Poly:
        return (0,) * n + (c,) if c else ()

    @staticmethod
    def deg(a: Poly) -> int:
        """Degree; the zero polynomial gets -1."""
        return len(a) - 1

    @staticmethod
    def lc(a: Poly) -> int:
        return a[-1] if a else 0

    def is_monic(self, a: Poly) -> bool:
        return bool(a) and a[-1] == 1

    # -- additive structure -----------------------------------------------

    def add(self, a: Poly, b: Poly) -> Poly:
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return a
        if self._prime:
            p = self.p
            c = [(x + y) % p for x, y in zip(a, b)]
        else:
            add = self.F.add
            c = [add(x, y) for x, y in zip(a, b)]
        c.extend(a[len(b):])
        return _trim(c)

    def neg(self, a: Poly) -> Poly:
        if self._prime:
            p = self.p
            return tuple((-x) % p for x in a)
        neg = self.F.neg
        return tuple(neg(x) for x in a)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.add(a, self.neg(b))

    def scale(self, a: Poly, c: int) -> Poly:
        if c == 0:
            return ()
        if c == 1:
            return a
        if self._prime:
            p = self.p
            return tuple(x * c % p for x in a)
        mul = self.F.mul
        return tuple(mul(x, c) for x in a)

    def shift(self, a: Poly, n: int) -> Poly:
        return (0,) * n + a if a else ()

    # -- multiplication ---------------------------------------------------

    def mul(self, a: Poly, b: Poly) -> Poly:
        if not a or not b:
            return ()
        if len(a) == 1:
            return self.scale(b, a[0])
        if len(b) == 1:
            return self.scale(a, b[0])
        if self._prime:
            if min(len(a), len(b)) >= _KRONECKER_MIN:
                return self._mul_kronecker(a, b)
            p = self.p
            c = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        c[i + j] += x * y
            return _trim([v % p for v in c])
        add, mul = self.F.add, self.F.mul
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        c[i + j] = add(c[i + j], mul(x, y))
        return _trim(c)

    def _mul_kronecker(self, a: Poly, b: Poly) -> Poly:
        # Pack into integers with slots wide enough for the unreduced convolution.
        p = self.p
        bound = (p - 1) ** 2 * min(len(a), len(b))
        nbytes = (bound.bit_length() + 7) // 8
        pa = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in a), "little")
        pb = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in b), "little")
        n = len(a) + len(b) - 1
        raw = (pa * pb).to_bytes(n * nbytes, "little")
        return _trim(
            [int.from_bytes(raw[i:i + nbytes], "little") % p for i in range(0, n * nbytes, nbytes)]
        )

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent in F_q[T]")
        r: Poly = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def frobenius(self, a: Poly) -> Poly:
        """a^q.  Coefficients are F_q-fixed, so only the exponents spread out."""
        if not a:
            return ()
        q = self.q
        c = [0] * ((len(a) - 1) * q + 1)
        for i, x in enumerate(a):
            c[i * q] = x
        return tuple(c)

    # -- division ---------------------------------------------------------

    def divmod(self, a: Poly, b: Poly) -> tuple[Poly, Poly]:
        if not b:
            raise DivisionByZero("polynomial division by zero")
        db = len(b) - 1
        if len(a) - 1 < db:
            return (), a
        F = self.F
        inv = F.inv(b[-1])
        r = list(a)
        quo = [0] * (len(a) - db)
        if self._prime:
            p = self.p
            for s in range(len(a) - 1 - db, -1, -1):
                c = r[s + db] * inv % p
                if c:
                    quo[s] = c
                    for i in range(db + 1):
                        r[s + i] = (r[s + i] - c * b[i]) % p
        else:
            add, mul, neg = F.add, F.mul, F.neg
            for s in range(len(a) - 1 - db, -1, -1):
                c = mul(r[s + db], inv)
                if c:
                    quo[s] = c
                    nc = neg(c)
                    for i in range(db + 1):
                        r[s + i] = add(r[s + i], mul(nc, b[i]))
        return _trim(quo), _trim(r[:db])

    def rem(self, a: Poly, b: Poly) -> Poly:
        return self.divmod(a, b)[1]

    def exquo(self, a: Poly, b: Poly) -> Poly:
        quo, r = self.divmod(a, b)
        if r:
            raise NonExactDivision("inexact division in F_q[T]")
        return quo

    def divides(self, b: Poly, a: Poly) -> bool:
        return not self.rem(a, b)

    def monic(self, a: Poly) -> Poly:
        if not a or a[-1] == 1:
            return a
        return self.scale(a, self.F.inv(a[-1]))

    def gcd(self, a: Poly, b: Poly) -> Poly:
        """Monic gcd."""
        if not a and not b:
            raise BothZero("gcd(0, 0) is undefined")
        while b:
            a, b = b, self.rem(a, b)
        return self.monic(a)

    def content(self, coeffs: Iterable[Poly]) -> Poly:
        """Monic gcd of the nonzero entries of a polynomial over A."""
        g: Poly = ()
        for c in coeffs:
            if c:
                g = self.gcd(g, c) if g else self.monic(c)
                if g == self.one:
                    return g
        if not g:
            raise ZeroPolynomial("content of the zero polynomial")
        return g

    # -- enumeration ------------------------------------------------------

    def iter_monic(self, d: int) -> Iterator[Poly]:
        """All monic polynomials of degree exactly d."""
        for lower in itertools.product(range(self.q), repeat=d):
            yield lower + (1,)

    def iter_nonzero_below(self, d: int) -> Iterator[Poly]:
        """Nonzero polynomials of degree < d: by degree, then lexicographic on the
        coefficient sequence (lowest degree first)."""
        q = self.q
        for j in range(d):
            for seq in itertools.product(*([range(q)] * j + [range(1, q)])):
                yield seq

    # -- factorization ----------------------------------------------------

    def is_irreducible(self, m: Poly) -> bool:
        if len(m) < 2:
            raise ConstantPolynomial("irreducibility is tested for degree >= 1")
        d = len(m) - 1
        for e in range(1, d // 2 + 1):
            for f in self.iter_monic(e):
                if self.divides(f, m):
                    return False
        return True

    def factor(self, m: Poly) -> tuple[int, list[tuple[Poly, int]]]:
        """(unit, [(monic irreducible, exponent), ...]) with m = unit * prod."""
        if not m:
            raise ZeroPolynomial("cannot factor 0")
        unit = m[-1]
        rest = self.monic(m)
        found: list[tuple[Poly, int]] = []
        e = 1
        while len(rest) - 1 >= 2 * e:
            for f in self.iter_monic(e):
                k = 0
                while True:
                    quo, r = self.divmod(rest, f)
                    if r:
                        break
                    rest, k = quo, k + 1
                if k:
                    found.append((f, k))
            e += 1
        if len(rest) > 1:
            for i, (f, k) in enumerate(found):
                if f == rest:
                    found[i] = (f, k + 1)
                    break
            else:
                found.append((rest, 1))
        found.sort(key=lambda fk: (len(fk[0]), fk[0]))
        return unit, found

    def euler_phi(self, m: Poly) -> int:
        """prod_i (q^{deg P_i^{s_i}} - q^{deg P_i^{s_i - 1}})."""
        if len(m) < 2:
            raise ConstantPolynomial("euler_phi needs deg m >= 1")
        q = self.q
        total = 1
        for f, s in self.factor(m)[1]:
            d = len(f) - 1
            total *= q ** (d * s) - q ** (d * (s - 1))
        return total

    # -- modular arithmetic -----------------------------------------------

    def mulmod(self, a: Poly, b: Poly, m: Poly) -> Poly:
        return self.rem(self.mul(a, b), m)

    def powmod(self, a: Poly, e: int, m: Poly) -> Poly:
        if e < 0:
            raise ValueError("negative exponent; invert first")
        r: Poly = self.rem(self.one, m)
        a = self.rem(a, m)
        while e:
            if e & 1:
                r = self.mulmod(r, a, m)
            e >>= 1
            if e:
                a = self.mulmod(a, a, m)
        return r


def poly_divmod(A: PolyRing, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return A.divmod(a, b)


def poly_gcd(A: PolyRing, a: Poly, b: Poly) -> Poly:
    return A.gcd(a, b)


@dataclass(frozen=True, eq=False)
class ResidueCtx:
    """(A / m A)^x for a monic irreducible m, with the factored group order."""

    A: PolyRing
    modulus: Poly
    group_order: int = field(init=False)
    order_factors: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self):
        n = self.A.q ** (len(self.modulus) - 1) - 1
        object.__setattr__(self, "group_order", n)
        object.__setattr__(self, "order_factors", tuple(sorted(factor_int(n).items())) if n > 1 else ())

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def reduce(self, a: Poly) -> Poly:
        return self.A.rem(a, self.modulus)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.A.mulmod(a, b, self.modulus)

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            a = self.inv(a)
            e = -e
        return self.A.powmod(a, e, self.modulus)

    def inv(self, a: Poly) -> Poly:
        a = self.reduce(a)
        if not a:
            raise NotCoprime("0 is not invertible modulo the prime")
        return self.A.powmod(a, self.group_order - 1, self.modulus)

    def is_generator(self, g: Poly) -> bool:
        g = self.reduce(g)
        if not g:
            return False
        n = self.group_order
        one = self.A.one
        return all(self.pow(g, n // r) != one for r, _ in self.order_factors)


def make_residue_ctx(A: PolyRing, modulus: Poly) -> ResidueCtx:
    if len(modulus) < 2:
        raise ConstantPolynomial("the modulus must have degree >= 1")
    if not A.is_monic(modulus):
        raise NotPrime("the modulus must be monic")
    if not A.is_irreducible(modulus):
        raise NotPrime("the modulus is reducible")
    ctx = ResidueCtx(A, tuple(modulus))
    prod = math.prod(r**e for r, e in ctx.order_factors)
    assert prod == ctx.group_order
    return ctx


def find_primitive_root(ctx: ResidueCtx) -> Poly:
    """First generator of (A/mA)^x in the fixed enumeration order."""
    for cand in ctx.A.iter_nonzero_below(ctx.degree):
        if ctx.is_generator(cand):
            return cand
    raise AssertionError("no primitive root found; the modulus cannot be irreducible")


def discrete_log(ctx: ResidueCtx, g: Poly, a: Poly) -> int:
    """The h in [0, n) with g^h = a mod the prime, by baby-step/giant-step."""
    if not ctx.is_generator(g):
        raise NotGenerator("base is not a primitive root")
    a = ctx.reduce(a)
    if not a:
        raise NotCoprime("argument shares a factor with the modulus")
    n = ctx.group_order
    m = math.isqrt(n - 1) + 1 if n > 1 else 1
    g = ctx.reduce(g)
    table: dict[Poly, int] = {}
    cur = ctx.A.one
    for j in range(m):
        table.setdefault(cur, j)
        cur = ctx.mul(cur, g)
    giant = ctx.pow(g, (-m) % n)
    gamma = a
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            return (i * m + j) % n
        gamma = ctx.mul(gamma, giant)
    raise AssertionError("discrete log not found for a generator")

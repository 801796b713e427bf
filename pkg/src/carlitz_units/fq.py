"""Arithmetic in the finite field F_q, q = p^k.

Elements are plain ints.  For k = 1 an element is its residue in [0, p).  For
k > 1 the element c_0 + c_1 t + ... + c_{k-1} t^{k-1} of F_p[t]/(modulus) is
encoded as the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so the coefficient
vector is the base-p digit expansion of the code.  Every element is therefore
stored in exactly one way and equality is integer equality.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DegreeMismatch, DivisionByZero, NotPrime, ReducibleModulus

_ADD_TABLE_LIMIT = 256


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_int(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _fp_poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _fp_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division of f by every monic polynomial of degree <= deg f / 2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cand = [(code // p**i) % p for i in range(d)] + [1]
            if not _fp_poly_rem(f, cand, p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_q.  Build it with :func:`make_field`, which validates."""

    p: int
    k: int = 1
    modulus: Optional[tuple[int, ...]] = None
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.k)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"FieldSpec(F_{self.p})"
        return f"FieldSpec(F_{self.q}, modulus={list(self.modulus)})"

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    # -- element encoding -------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Coefficient vector (length k, lowest first) of the element ``a``."""
        p = self.p
        return [(a // p**i) % p for i in range(self.k)]

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) > self.k:
            raise DegreeMismatch(f"expected at most {self.k} coefficients, got {len(ds)}")
        p = self.p
        return sum((d % p) * p**i for i, d in enumerate(ds))

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    @property
    def generator(self) -> int:
        """The class of t (for k > 1), i.e. code p.  For k = 1 this is just 1."""
        return self.p if self.k > 1 else 1

    def elements(self) -> range:
        return range(self.q)

    # -- tables for k > 1 -------------------------------------------------

    def _mul_digits(self, a: int, b: int) -> int:
        p, m = self.p, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        while prod and prod[-1] == 0:
            prod.pop()
        return self.from_digits(_fp_poly_rem(prod, m, p))

    @functools.cached_property
    def _log_tables(self) -> tuple[list[int], list[int]]:
        # exp[i] = w^i for a primitive element w; log is its inverse.
        n = self.q - 1
        orders = [n // r for r in factor_int(n)]
        for w in range(2, self.q):
            if all(self._pow_slow(w, e) != 1 for e in orders):
                break
        else:  # q = 2 is prime, so k > 1 always finds one
            w = 1
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._mul_digits(exp[i - 1], w)
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        return exp, log

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_digits(r, a)
            a = self._mul_digits(a, a)
            e >>= 1
        return r

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    @functools.cached_property
    def _add_table(self) -> Optional[list[list[int]]]:
        if self.q > _ADD_TABLE_LIMIT:
            return None
        return [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]

    @functools.cached_property
    def _neg_table(self) -> list[int]:
        p = self.p
        return [self.from_digits([(-d) % p for d in self.digits(a)]) for a in range(self.q)]

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        return table[a][b] if table is not None else self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._log_tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        return fq_inv(a, self)

    def pow(self, a: int, e: int) -> int:
        return fq_pow(a, e, self)


def make_field(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Validated F_{p^k}.  ``modulus`` lists F_p coefficients, lowest first."""
    if not is_prime_int(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
    if k == 1:
        if modulus is not None and len(modulus) not in (0, 2):
            raise DegreeMismatch("a prime field takes no modulus")
        return FieldSpec(p, 1, None)
    if modulus is None:
        raise DegreeMismatch(f"k = {k} > 1 needs a defining modulus")
    mod = [c % p for c in modulus]
    while mod and mod[-1] == 0:
        mod.pop()
    if len(mod) - 1 != k:
        raise DegreeMismatch(f"modulus has degree {len(mod) - 1}, expected {k}")
    if mod[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if not _fp_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    return FieldSpec(p, k, tuple(mod))


def fq_inv(a: int, F: FieldSpec) -> int:
    if a % F.q == 0:
        raise DivisionByZero("0 has no inverse in F_q")
    if F.k == 1:
        return pow(a, F.p - 2, F.p)
    exp, log = F._log_tables
    return exp[(-log[a]) % (F.q - 1)]


def fq_pow(a: int, e: int, F: FieldSpec) -> int:
    if e < 0:
        a = fq_inv(a, F)
        e = -e
    if e == 0:
        return 1
    if a == 0:
        return 0
    if F.k == 1:
        return pow(a, e, F.p)
    exp, log = F._log_tables
    return exp[log[a] * e % (F.q - 1)]

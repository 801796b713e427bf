"""Polynomials over A = F_q[T] in a second variable x.

An element of A[x] is a tuple of A-polynomials (see :mod:`poly`), lowest
x-degree first, with no trailing zero coefficients.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, NonExactDivision
from .poly import Poly, PolyRing

XPoly = tuple[Poly, ...]


def trim(c: Iterable[Poly]) -> XPoly:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def add(A: PolyRing, a: XPoly, b: XPoly) -> XPoly:
    if len(a) < len(b):
        a, b = b, a
    return trim([A.add(x, y) for x, y in zip(a, b)] + list(a[len(b):]))


def neg(A: PolyRing, a: XPoly) -> XPoly:
    return tuple(A.neg(c) for c in a)


def sub(A: PolyRing, a: XPoly, b: XPoly) -> XPoly:
    return add(A, a, neg(A, b))


def scale(A: PolyRing, a: XPoly, c: Poly) -> XPoly:
    """Multiply every coefficient by the A-element c."""
    return trim(A.mul(x, c) for x in a)


def mul(A: PolyRing, a: XPoly, b: XPoly) -> XPoly:
    if not a or not b:
        return ()
    if A.F.k == 1 and len(a) > 1 and len(b) > 1:
        return _mul_packed(A.p, a, b)
    c: list[Poly] = [()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    c[i + j] = A.add(c[i + j], A.mul(x, y))
    return trim(c)


def _mul_packed(p: int, a: XPoly, b: XPoly) -> XPoly:
    # Two-level Kronecker substitution: T-slots inside x-blocks of width la+lb-1.
    la = max(len(c) for c in a)
    lb = max(len(c) for c in b)
    stride = la + lb - 1
    bound = (p - 1) ** 2 * min(la, lb) * min(len(a), len(b))
    nb = max(1, (bound.bit_length() + 7) // 8)

    def pack(xs: XPoly) -> int:
        pad = b"\x00" * nb
        chunks = []
        for c in xs:
            chunks.append(b"".join(v.to_bytes(nb, "little") for v in c))
            chunks.append(pad * (stride - len(c)))
        return int.from_bytes(b"".join(chunks), "little")

    n = len(a) + len(b) - 1
    raw = (pack(a) * pack(b)).to_bytes(n * stride * nb, "little")
    out = []
    block = stride * nb
    for i in range(n):
        base = i * block
        c = [int.from_bytes(raw[base + s:base + s + nb], "little") % p for s in range(0, block, nb)]
        while c and c[-1] == 0:
            c.pop()
        out.append(tuple(c))
    return trim(out)


def divmod_monic(A: PolyRing, a: XPoly, b: XPoly) -> tuple[XPoly, XPoly]:
    """Division in A[x] by a divisor whose leading x-coefficient is a unit of A."""
    if not b:
        raise DivisionByZero("division by the zero polynomial in A[x]")
    lead = b[-1]
    if len(lead) != 1:
        raise NonExactDivision("leading x-coefficient of the divisor is not a unit of A")
    inv = A.F.inv(lead[0])
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    r = list(a)
    quo: list[Poly] = [()] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = A.scale(r[s + db], inv)
        if c:
            quo[s] = c
            for i in range(db + 1):
                if b[i]:
                    r[s + i] = A.sub(r[s + i], A.mul(c, b[i]))
    return trim(quo), trim(r[:db])


def exquo_monic(A: PolyRing, a: XPoly, b: XPoly) -> XPoly:
    quo, r = divmod_monic(A, a, b)
    if r:
        raise NonExactDivision("A[x] division left a nonzero remainder")
    return quo


def divide_by_x(a: XPoly) -> XPoly:
    if a and a[0]:
        raise NonExactDivision("constant term is nonzero; x does not divide")
    return a[1:]


def constant_term(a: XPoly) -> Poly:
    return a[0] if a else ()


def pow(A: PolyRing, a: XPoly, e: int) -> XPoly:
    r: XPoly = (A.one,)
    while e:
        if e & 1:
            r = mul(A, r, a)
        e >>= 1
        if e:
            a = mul(A, a, a)
    return r


def evaluate(A: PolyRing, a: XPoly, at: Poly) -> Poly:
    """Substitute an element of A for x."""
    acc: Poly = ()
    for c in reversed(a):
        acc = A.add(A.mul(acc, at), c)
    return acc


def content(A: PolyRing, a: Sequence[Poly]) -> Poly:
    return A.content(a)

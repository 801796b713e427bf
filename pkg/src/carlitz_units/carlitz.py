"""The Carlitz module over A = F_q[T].

C_m is stored sparsely as the list of its coefficients [m, i] at x^{q^i}; the
dense form has degree q^{deg m} and is only built on request.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import xpoly
from .errors import NotPrime, ZeroIndex
from .poly import Poly, PolyRing
from .xpoly import XPoly


@dataclass(frozen=True)
class AdditivePoly:
    """C_m(x) = sum_i coeffs[i] * x^{q^i}."""

    m: Poly
    coeffs: tuple[Poly, ...]


def _frobenius_power(A: PolyRing, a: Poly, i: int) -> Poly:
    for _ in range(i):
        a = A.frobenius(a)
    return a


def compose(A: PolyRing, f: AdditivePoly, g: AdditivePoly) -> AdditivePoly:
    """f o g for additive polynomials: tau^i * b = b^{q^i} * tau^i."""
    out: list[Poly] = [()] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = A.add(out[i + j], A.mul(a, _frobenius_power(A, b, i)))
    while len(out) > 1 and not out[-1]:
        out.pop()
    return AdditivePoly(A.mul(f.m, g.m), tuple(out))


def carlitz_coeffs(A: PolyRing, m: Poly) -> AdditivePoly:
    """Coefficients of C_m, by Horner over the T-digits of m with C_T = T + tau."""
    if not m:
        raise ZeroIndex("C_0 is the zero map; index must be nonzero")
    T = A.T
    coeffs: list[Poly] = [A.const(m[-1])]
    for c in reversed(m[:-1]):
        # C_T o C_prev = T*C_prev + tau*C_prev, then add the scalar c.
        nxt = [A.mul(T, coeffs[0])]
        for i in range(1, len(coeffs)):
            nxt.append(A.add(A.mul(T, coeffs[i]), A.frobenius(coeffs[i - 1])))
        nxt.append(A.frobenius(coeffs[-1]))
        nxt[0] = A.add(nxt[0], A.const(c))
        coeffs = nxt
    return AdditivePoly(tuple(m), tuple(coeffs))


def carlitz_expand(A: PolyRing, ap: AdditivePoly) -> XPoly:
    """Dense A[x] form of C_m."""
    q = A.q
    top = q ** (len(ap.coeffs) - 1)
    dense: list[Poly] = [()] * (top + 1)
    for i, c in enumerate(ap.coeffs):
        dense[q**i] = c
    return xpoly.trim(dense)


def carlitz_poly(A: PolyRing, m: Poly) -> XPoly:
    return carlitz_expand(A, carlitz_coeffs(A, m))


def cyclotomic_poly(A: PolyRing, prime: Poly, s: int = 1) -> XPoly:
    """Psi_{P^s}(x) = C_{P^s}(x) / C_{P^{s-1}}(x) for a monic irreducible P."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if len(prime) < 2 or not A.is_monic(prime) or not A.is_irreducible(prime):
        raise NotPrime("cyclotomic_poly needs a monic irreducible polynomial")
    top = carlitz_poly(A, A.pow(prime, s))
    below = carlitz_poly(A, A.pow(prime, s - 1))
    # C_{P^{s-1}} is monic in x since P is monic, so the division is clean.
    psi = xpoly.exquo_monic(A, top, below)
    assert psi[-1] == A.one
    if s == 1:
        assert xpoly.constant_term(psi) == tuple(prime)
    return psi

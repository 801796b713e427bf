"""Text forms used on the command line and in files.

* F_q element: an integer for k = 1; ``[c0,c1,...]`` (F_p digits, lowest first)
  for k > 1.
* Element of A: bracketed coefficient list ``[1,1,1]`` (lowest degree first,
  the emitted form) or a human sum such as ``T^2+T+1``.  For k > 1 the human
  form may use ``t`` for the generator of F_q over F_p, e.g. ``(t+1)*T+t``.
* Polynomial over A in x: ``[c0, c1, ...]`` of A-elements, lowest x-degree first.
* Element of O: ``[c0; c1; ...; c_{n-1}]``; shorter lists are zero-padded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .fq import FieldSpec
from .poly import Poly, PolyRing
from .ring import CycContext, RingElem, reduce
from .units import UnitDecomposition
from .xpoly import XPoly

# -- formatting ----------------------------------------------------------------


def format_fq(a: int, F: FieldSpec) -> str:
    if F.k == 1:
        return str(a)
    return "[" + ",".join(str(d) for d in F.digits(a)) + "]"


def format_poly(a: Poly, F: FieldSpec) -> str:
    if not a:
        return "[0]"
    return "[" + ",".join(format_fq(c, F) for c in a) + "]"


def human_fq(a: int, F: FieldSpec) -> str:
    if F.k == 1:
        return str(a)
    terms = []
    for i, d in reversed(list(enumerate(F.digits(a)))):
        if d:
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = "" if (d == 1 and mono) else str(d)
            terms.append(coef + ("*" if coef and mono else "") + mono)
    return "+".join(terms) or "0"


def human_poly(a: Poly, F: FieldSpec, var: str = "T") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = human_fq(c, F)
        if "+" in cs and mono:
            cs = f"({cs})"
        if mono:
            terms.append(mono if c == 1 else f"{cs}*{mono}")
        else:
            terms.append(cs)
    return "+".join(terms)


def format_xpoly(P: XPoly, F: FieldSpec) -> str:
    return "[" + ",".join(format_poly(c, F) for c in P) + "]"


def human_xpoly(P: XPoly, F: FieldSpec) -> str:
    terms = []
    for i in range(len(P) - 1, -1, -1):
        c = P[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        cs = human_poly(c, F)
        if mono:
            if c == (1,):
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        else:
            terms.append(cs)
    return " + ".join(terms) or "0"


def format_element(a: RingElem) -> str:
    F = a.ctx.F
    return "[" + ";".join(format_poly(c, F) for c in a.coeffs) + "]"


def format_decomposition(dec: UnitDecomposition, ctx: CycContext) -> str:
    F = ctx.F
    lines = [
        f"context q={ctx.q} p={F.p} k={F.k} prime={format_poly(ctx.prime, F)} g={format_poly(ctx.g, F)}",
        f"ell={dec.ell}",
        f"Q={format_xpoly(dec.Q, F)}",
        f"witness={format_element(dec.witness)}",
    ]
    return "\n".join(lines)


# -- parsing -------------------------------------------------------------------


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced brackets in {s!r}")
    parts.append("".join(cur))
    return parts


def _unbracket(s: str) -> Optional[str]:
    s = s.strip()
    if s.startswith("[") and s.endswith("]"):
        return s[1:-1]
    return None


def parse_fq(s: str, F: FieldSpec) -> int:
    s = s.strip()
    inner = _unbracket(s)
    try:
        if inner is not None:
            digits = [int(x) for x in inner.split(",") if x.strip()]
            return F.from_digits(digits)
        return F.from_int(int(s))
    except ValueError as exc:
        raise ParseError(f"bad field element {s!r}: {exc}") from None


def parse_poly(s: str, F: FieldSpec, var: str = "T") -> Poly:
    """Either the bracketed list or a human expression in ``var`` (and ``t``)."""
    A = PolyRing(F)
    s = s.strip()
    if not s:
        raise ParseError("empty polynomial")
    inner = _unbracket(s)
    if inner is not None:
        if not inner.strip():
            return ()
        return A.make(parse_fq(c, F) for c in _split_top(inner, ","))
    return _ExprParser(s, A, var).parse()


class _ExprParser:
    """expr := term (('+'|'-') term)* ; term := factor ('*'? factor)* ;
    factor := atom ('^' int)? ; atom := int | var | 't' | '(' expr ')'."""

    _TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")

    def __init__(self, text: str, A: PolyRing, var: str):
        self.A = A
        self.var = var
        self.toks = []
        for num, name, op in self._TOKEN.findall(text):
            if num:
                self.toks.append(("num", int(num)))
            elif name:
                self.toks.append(("name", name))
            elif op.strip():
                self.toks.append(("op", op))
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Poly:
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self) -> Poly:
        A = self.A
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        val = self.term()
        if sign < 0:
            val = A.neg(val)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = A.add(val, rhs) if op == "+" else A.sub(val, rhs)
        return val

    def term(self) -> Poly:
        val = self.factor()
        while True:
            kind, v = self.peek()
            if (kind, v) == ("op", "*"):
                self.take()
                val = self.A.mul(val, self.factor())
            elif kind in ("num", "name") or (kind, v) == ("op", "("):
                val = self.A.mul(val, self.factor())
            else:
                return val

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            base = self.A.pow(base, e)
        return base

    def atom(self) -> Poly:
        A = self.A
        kind, v = self.take()
        if kind == "num":
            return A.const(A.F.from_int(v))
        if kind == "name":
            if v == self.var:
                return A.T
            if v == "t" and A.F.k > 1:
                return A.const(A.F.generator)
            raise ParseError(f"unknown symbol {v!r} in {self.text!r}")
        if (kind, v) == ("op", "("):
            val = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return val
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def parse_xpoly(s: str, F: FieldSpec) -> XPoly:
    inner = _unbracket(s)
    if inner is None:
        raise ParseError(f"polynomial over A must be bracketed: {s!r}")
    if not inner.strip():
        return ()
    coeffs = [parse_poly(c, F) for c in _split_top(inner, ",")]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def parse_element(s: str, ctx: CycContext) -> RingElem:
    """Parse ``[c0; c1; ...]``.  Longer inputs are reduced modulo Psi."""
    inner = _unbracket(s)
    if inner is None:
        raise ParseError(f"ring element must be bracketed: {s!r}")
    parts = _split_top(inner, ";")
    coeffs = [parse_poly(c, ctx.F) if c.strip() else () for c in parts]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return reduce(tuple(coeffs), ctx)


# -- configuration ---------------------------------------------------------------


@dataclass
class RunConfig:
    p: int
    k: int = 1
    modulus: Optional[str] = None
    prime_poly: str = "T"
    primitive_root: Optional[str] = None
    seed: int = 0
    trials: int = 10

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        """Flat ``key = value`` lines; ``#`` starts a comment."""
        raw: dict[str, str] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"line {lineno}: expected key = value")
            key, val = (x.strip() for x in line.split("=", 1))
            raw[key] = val
        known = {"p", "k", "modulus", "prime_poly", "primitive_root", "seed", "trials"}
        unknown = set(raw) - known
        if unknown:
            raise ParseError(f"unknown config keys: {sorted(unknown)}")
        if "p" not in raw:
            raise ParseError("config needs p")
        try:
            return cls(
                p=int(raw["p"]),
                k=int(raw.get("k", 1)),
                modulus=raw.get("modulus") or None,
                prime_poly=raw.get("prime_poly", "T"),
                primitive_root=raw.get("primitive_root") or None,
                seed=int(raw.get("seed", 0)),
                trials=int(raw.get("trials", 10)),
            )
        except ValueError as exc:
            raise ParseError(f"bad integer in config: {exc}") from None

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        with open(path) as fh:
            return cls.from_text(fh.read())

    def field(self) -> FieldSpec:
        from .fq import make_field

        mod = None
        if self.modulus is not None:
            Fp = make_field(self.p)
            text = self.modulus
            var = "t" if "t" in text and "T" not in text else "T"
            mod = list(parse_poly(text, Fp, var=var))
        return make_field(self.p, self.k, mod)

    def context(self) -> CycContext:
        from .ring import make_context

        F = self.field()
        prime = parse_poly(self.prime_poly, F)
        g = parse_poly(self.primitive_root, F) if self.primitive_root else None
        return make_context(F, prime, g)

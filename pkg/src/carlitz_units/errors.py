"""Exception hierarchy.

User-facing errors derive from :class:`CarlitzError` (and ``ValueError`` where
the input is at fault).  Conditions that the theory says cannot happen derive
from :class:`InvariantViolation`, which is also an ``AssertionError``: seeing
one means a bug, not bad input.
"""


class CarlitzError(Exception):
    pass


class InvariantViolation(CarlitzError, AssertionError):
    pass


class NotPrime(CarlitzError, ValueError):
    pass


class ReducibleModulus(CarlitzError, ValueError):
    pass


class DegreeMismatch(CarlitzError, ValueError):
    pass


class DivisionByZero(CarlitzError, ZeroDivisionError):
    pass


class BothZero(CarlitzError, ValueError):
    pass


class ZeroPolynomial(CarlitzError, ValueError):
    pass


class ConstantPolynomial(CarlitzError, ValueError):
    pass


class NotCoprime(CarlitzError, ValueError):
    pass


class NotGenerator(CarlitzError, ValueError):
    pass


class ZeroIndex(CarlitzError, ValueError):
    pass


class StarViolated(CarlitzError, ValueError):
    """q = 2 and deg(prime) = 1: the Galois group is trivial."""


class ContextMismatch(CarlitzError, ValueError):
    pass


class NotAUnit(CarlitzError, ValueError):
    pass


class NotNormOne(CarlitzError, ValueError):
    pass


class ZeroElement(CarlitzError, ValueError):
    pass


class NotInG(CarlitzError, ValueError):
    pass


class WitnessNotUnit(CarlitzError, ValueError):
    pass


class ParseError(CarlitzError, ValueError):
    pass


class NonExactDivision(InvariantViolation):
    pass


class NormNotInBase(InvariantViolation):
    pass


class LambdaMismatch(InvariantViolation):
    pass


class ResolventVanished(InvariantViolation):
    pass

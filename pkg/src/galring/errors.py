"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes):

* :class:`MathError` -- the input was well formed but the mathematical object
  asked for does not exist (a non-unit has no inverse, a set of elements is
  not a basis, ...).
* :class:`UsageError` -- the input itself is malformed or out of range.
"""


class GaloisRingError(Exception):
    """Base class for every error raised by this package."""


class MathError(GaloisRingError, ArithmeticError):
    pass


class UsageError(GaloisRingError, ValueError):
    pass


class NotAUnit(MathError):
    pass


class Singular(MathError):
    """Matrix over Z_{p^r} whose determinant is not a unit."""


class SingularOverGR(MathError):
    """Matrix over a Galois ring whose determinant is not a unit."""


class NotMonic(MathError):
    pass


class NotIrreducible(MathError):
    pass


class NotPrimitiveInput(MathError):
    pass


class NotABasis(MathError):
    pass


class DigitNotTeichmuller(MathError):
    pass


class InternalError(GaloisRingError, RuntimeError):
    """An identity that must hold by construction failed."""


class NonScalarResult(InternalError):
    pass


class NonSquare(UsageError):
    pass


class RingMismatch(UsageError):
    pass


class WrongCardinality(UsageError):
    pass


class BadRingSpec(UsageError):
    pass


class BadLiteral(UsageError):
    pass


class TooLarge(UsageError):
    """An exhaustive enumeration would exceed the configured guard."""

"""Exceptions raised by the skew LCD code toolkit."""


class SkewLcdError(Exception):
    """Base class of every error raised by this package."""


class ParseError(SkewLcdError, ValueError):
    """A field, element, ring element or polynomial string is malformed."""


class NotPrimeError(SkewLcdError, ValueError):
    """The characteristic of a field is not a prime."""


class DegreeMismatchError(SkewLcdError, ValueError):
    """The modulus is not monic or its degree is not the extension degree."""


class ReducibleModulusError(SkewLcdError, ValueError):
    """The modulus of a field is reducible over the prime field."""


class FieldMismatchError(SkewLcdError, TypeError):
    """Two values of different fields were combined."""


class RingMismatchError(SkewLcdError, TypeError):
    """Two skew polynomials of different skew polynomial rings were combined."""


class DivisionByZeroError(SkewLcdError, ZeroDivisionError):
    """Inversion of zero or division by the zero polynomial."""


class BothZeroError(SkewLcdError, ValueError):
    """The greatest common right divisor of two zero polynomials was requested."""


class ZeroPolynomialError(SkewLcdError, ValueError):
    """An operation needs a nonzero polynomial."""


class OddExtensionDegreeError(SkewLcdError, ValueError):
    """Hermitian conjugation needs an even extension degree."""


class BudgetExceededError(SkewLcdError, RuntimeError):
    """An exhaustive scan would visit more candidates than allowed."""


class NotADivisorError(SkewLcdError, ValueError):
    """A generator does not right-divide its modulus."""


class TwoSidedMismatchError(SkewLcdError, ValueError):
    """A cofactor multiplies to the modulus on one side only."""


class NonUnitDeltaError(SkewLcdError, ValueError):
    """A scaling element is not a unit."""


class ZeroCodeError(SkewLcdError, ValueError):
    """The minimum distance of the zero code was requested."""


class LambdaNotInvolutiveError(SkewLcdError, ValueError):
    """The gcrd criterion needs a constant with square one."""


class LengthNotMultipleOfOrderError(SkewLcdError, ValueError):
    """The code length is not a multiple of the automorphism order."""


class NonUnitError(SkewLcdError, ValueError):
    """An element of F_q+vF_q is not invertible."""


class UnsupportedVariantError(SkewLcdError, ValueError):
    """A census variant name is unknown."""


class CharacteristicTwoWithOneMinusTwoVError(SkewLcdError, ValueError):
    """The constant 1-2v collapses to 1 in characteristic two."""


class CriterionMismatchError(SkewLcdError, RuntimeError):
    """The gcrd verdict and the matrix verdict of an LCD test disagree."""


class RowMismatchError(SkewLcdError, AssertionError):
    """A recomputed table row differs from the expected row."""

"""Exception hierarchy shared by every module of the package."""


class TwistAlexError(Exception):
    """Base class for all package errors."""


class InvalidRational(TwistAlexError, ValueError):
    """A rational does not describe a 2-bridge knot (odd/odd, coprime, 0 < |beta| < alpha)."""


class DegenerateFraction(TwistAlexError, ValueError):
    """A continued fraction evaluates to infinity."""


class InexactDivision(TwistAlexError, ArithmeticError):
    """A claimed exact division left a remainder or a non-integral quotient."""


class NotInvertible(TwistAlexError, ArithmeticError):
    """An element has no inverse in the quotient ring."""


class NonSquarefreeTheta(TwistAlexError, ValueError):
    """The modulus polynomial has a repeated factor."""


class NotInHp(TwistAlexError, ValueError):
    """The rational is not p-admissible."""


class InternalVerificationFailure(TwistAlexError, AssertionError):
    """A self-check on a computed invariant failed."""


class NotARepresentation(TwistAlexError, ValueError):
    """The chosen modulus does not make the parabolic matrices satisfy the relator."""

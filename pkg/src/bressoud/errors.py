"""Exception hierarchy."""


class BressoudError(Exception):
    """Base class for every error raised by this package."""


class ParseError(BressoudError, ValueError):
    """Malformed partition text or JSON."""


class InvalidParams(BressoudError, ValueError):
    """Parameter tuple violates the constraints of the requested family."""


class DegenerateExponent(InvalidParams):
    """A product exponent is zero, negative or non-integral."""


class NotInFamily(BressoudError, ValueError):
    """Input is not a member of the family an operation requires."""


class NotInB0bar(NotInFamily):
    pass


class NotInB1(NotInFamily):
    pass


class NotInDeta(NotInFamily):
    pass


class WindowMismatch(BressoudError, ValueError):
    """Overpartition is not in the window subset required by D_t or C_t."""


class BandError(BressoudError, ValueError):
    """A band argument is not a band of the required width."""


class NoBandInWindow(BandError):
    """No (k-2)-band lies in the requested half-open window."""


class InvariantViolation(BressoudError, AssertionError):
    """A property the construction guarantees failed at run time."""

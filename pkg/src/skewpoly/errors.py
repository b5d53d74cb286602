"""Exception types shared across the package."""


class SkewError(Exception):
    """Base class for all package errors."""


class FieldError(SkewError, ValueError):
    """Invalid field construction or an operand outside its field."""


class RingMismatchError(SkewError, ValueError):
    """Operands belong to different rings or fields."""


class ParseError(SkewError, ValueError):
    """Syntax error in a ring, element or polynomial literal."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class UnsupportedFieldError(SkewError, ValueError):
    """Operation not available over this coefficient field."""


class TrialsExhaustedError(SkewError, RuntimeError):
    """Las Vegas search ran out of trials; retry with a fresh seed."""


class InternalInvariantError(SkewError, AssertionError):
    """A structural invariant failed; indicates a bug, not bad input."""

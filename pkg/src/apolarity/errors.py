"""Shared exception types."""


class ApolarityError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(ApolarityError):
    """Operands live over different numbers of variables."""


class UnsafeFieldError(ApolarityError):
    """The prime modulus is too small for exact differentiation at this degree."""


class DegenerateRandomness(ApolarityError):
    """Random resampling hit its attempt cap without a usable draw."""


class IdentityViolation(ApolarityError):
    """An identity that must hold exactly failed; indicates an internal bug."""


class SystemFormatError(ApolarityError):
    """Malformed inverse-system file."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", col {column}"
            where += ": "
        super().__init__(where + message)

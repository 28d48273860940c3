"""Exception hierarchy shared across the package."""


class TvgsrError(Exception):
    """Base class for all package errors."""


class ParameterError(TvgsrError, ValueError):
    """A scalar parameter is outside its documented range."""


class InputError(TvgsrError, ValueError):
    """An input array violates a structural precondition (shape, symmetry, finiteness)."""


class ParseError(TvgsrError):
    """A text file could not be parsed; the message carries path and line context."""


class NumericError(TvgsrError, ArithmeticError):
    """A solver produced non-finite values; the message carries the iteration index."""

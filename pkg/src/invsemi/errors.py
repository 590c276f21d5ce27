"""Exception hierarchy shared by every module."""


class SemigroupError(Exception):
    """Base class for all library errors."""


class MalformedInputError(SemigroupError, ValueError):
    """Ragged, out-of-range or otherwise unusable input data."""


class ValidationError(SemigroupError, ValueError):
    """Input is well-formed but fails an algebraic requirement."""


class AssociativityError(ValidationError):
    def __init__(self, triple):
        self.triple = tuple(int(t) for t in triple)
        x, y, z = self.triple
        super().__init__(f"table is not associative: (x*y)*z != x*(y*z) at x={x}, y={y}, z={z}")


class MarkerError(ValidationError):
    """A zero or identity marker points at an element that is not one."""


class DomainError(SemigroupError, ValueError):
    """Parameter outside the domain of the operation."""


class MissingZeroError(DomainError):
    pass


class MissingIdentityError(DomainError):
    pass


class UnsupportedStructureError(SemigroupError):
    """The semigroup lacks the structure an operation requires."""


class SizeLimitError(SemigroupError):
    """Order exceeds a configured search bound."""


class InvariantViolation(SemigroupError, AssertionError):
    """An internal consistency check failed; indicates a bug."""


class ParseError(SemigroupError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (position {column})"
        super().__init__(message + where)

"""Error hierarchy shared by the algebra, OEIS and CLI layers."""
from typing import Any, Optional


class RiordanError(Exception):
    """Base class for every error raised by this package."""


class InexactDivision(RiordanError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class DivisionByZero(RiordanError, ZeroDivisionError):
    """Division by an exact zero."""


class NonUnitConstantTerm(RiordanError, ArithmeticError):
    """A series divisor has a constant term that is not invertible."""


class NonzeroConstantInner(RiordanError, ValueError):
    """The inner series of a composition has a nonzero constant term."""


class NotRevertible(RiordanError, ValueError):
    """A series has no compositional inverse (f(0) != 0 or f'(0) not a unit)."""


class BadConstantTerm(RiordanError, ValueError):
    """sqrt1 requires a constant term equal to 1."""


class TruncationExceeded(RiordanError, IndexError):
    """A coefficient or entry beyond the truncation order was requested."""


class SingularMatrix(RiordanError, ArithmeticError):
    """A lower-triangular matrix has a non-unit diagonal entry."""


class ZeroBeta(RiordanError, ValueError):
    """A J-fraction carries beta = 0 at an interior level."""


class HankelDegenerate(RiordanError, ArithmeticError):
    """Continued-fraction peeling met beta = 0 (a vanishing Hankel determinant)."""

    def __init__(self, level: int, message: Optional[str] = None):
        self.level = level
        super().__init__(message or f"Hankel degeneracy at level {level}")


class NotEnoughTerms(RiordanError, ValueError):
    """A sequence is too short for the requested transform."""


class UnsupportedCoefficient(RiordanError, TypeError):
    """The operation is not defined for this coefficient type."""


class DegenerateParameters(RiordanError, ValueError):
    """Family parameters make a closed form degenerate."""


class FixtureMissing(RiordanError, FileNotFoundError):
    """No vendored b-file exists and network access is disabled."""


class ParseError(RiordanError, ValueError):
    """A b-file line could not be parsed."""

    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: cannot parse {line!r}")


class ExpressionError(RiordanError, ValueError):
    """A CLI pair, sequence or family expression is malformed."""


class RouteMismatch(RiordanError, AssertionError):
    """Two independent computation routes disagree."""

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class CheckFailed(RiordanError, AssertionError):
    """A reproduction check computed something other than the reference value."""

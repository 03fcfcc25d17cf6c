"""Exception hierarchy shared by the whole package.

The command-line front end maps each family onto one exit code, so new
errors should subclass one of these rather than a bare builtin.
"""


class BlowupError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatchError(BlowupError, TypeError):
    """Operands live in different coefficient fields."""


class ParseError(BlowupError, ValueError):
    """Malformed polynomial, center or script text."""

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class PreconditionError(BlowupError, ValueError):
    """Input violates the documented precondition of an operation."""


class SurfaceError(PreconditionError):
    """A polynomial is not a valid Weierstrass-form surface equation."""


class NotPermittedError(PreconditionError):
    """Monoidal center is not a permitted (equimultiple, smooth) curve."""


class NotNearPointError(PreconditionError):
    """Scripted quadratic direction loses multiplicity while a near point exists."""


class DegenerateChartError(PreconditionError):
    """Every point of the exceptional line in the X-chart is equimultiple."""


class StepCapError(BlowupError, RuntimeError):
    """An iteration reached its configured step cap."""


class InvariantError(BlowupError, RuntimeError):
    """Internal bookkeeping invariant violated; indicates a bug."""


class NotDivisibleError(InvariantError, ArithmeticError):
    """Exact division requested on a non-divisible polynomial."""

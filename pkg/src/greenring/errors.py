"""Exception hierarchy shared by all greenring modules."""


class GreenRingError(Exception):
    """Base class for every error raised by this package."""


class ContextError(GreenRingError):
    """Operands live in incompatible variable contexts or rings."""


class DomainError(GreenRingError, ValueError):
    """An index or parameter is outside its admissible range."""


class IntegralityError(GreenRingError, ArithmeticError):
    """A result that must be integral came out with a fractional coefficient.

    This signals a broken internal invariant, never bad user input.
    """


class PresentationError(GreenRingError):
    """A ring map failed its construction-time relation check."""


class StructureError(GreenRingError):
    """Structure constants violate unit or associativity requirements."""


class InvolutionError(GreenRingError):
    """No consistent duality involution exists on the basis."""


class PreconditionError(GreenRingError):
    """A numeric routine was called on input outside its precondition."""


class ConvergenceError(GreenRingError, ArithmeticError):
    """An iterative method stopped without converging."""

    def __init__(self, message, iterations):
        super().__init__(message)
        self.iterations = iterations


class ParseError(GreenRingError, ValueError):
    """Syntax or naming error in an element expression."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset

"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the documented domain of a function or bound family."""


class ToleranceError(ArithmeticError):
    """Requested absolute tolerance cannot be certified at working precision."""


class UndecidedComparisonError(ArithmeticError):
    """A strict comparison fell inside the working-precision noise floor.

    Raised instead of silently passing or failing: the data cannot support
    either verdict.
    """

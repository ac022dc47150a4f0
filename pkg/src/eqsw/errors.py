"""Exception types shared across the calculator."""


class InvalidDataError(ValueError):
    """Inputs violate an operation's preconditions."""


class DataInconsistencyError(ArithmeticError):
    """Inputs are well-formed but cannot come from an actual group action."""


class LocalisationPoleError(ZeroDivisionError):
    """A localised Euler class has a vanishing factor."""


class InsufficientTruncationError(ArithmeticError):
    """A truncated series is too short to expose the requested coefficient."""

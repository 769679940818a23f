"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the supported domain of an operation."""


class PoleError(ZeroDivisionError):
    """Evaluation hit a pole, or an Euler factor became singular."""


class FanError(ValueError):
    """A fan document is malformed or violates the simplicial fan rules."""


class InternalCheckError(RuntimeError):
    """Two independent computations that must agree did not.

    Raised only when an identity that holds as a theorem fails, so it always
    indicates a bug rather than bad input.
    """

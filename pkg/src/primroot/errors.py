"""Exception types raised across the package."""


class PrimrootError(Exception):
    """Base class for all package errors."""


class CapacityError(PrimrootError, ValueError):
    """Input is above a hard size ceiling of the routine."""


class IncompleteFactorizationError(PrimrootError, ArithmeticError):
    """A composite cofactor could not be split."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not factor {n}: composite cofactor {cofactor} remains")
        self.n = n
        self.cofactor = cofactor


class DomainError(PrimrootError, ValueError):
    """Argument outside the mathematical domain of a formula."""


class ConfigError(PrimrootError, ValueError):
    """Missing, malformed, or non-positive configuration value."""


class InfeasibleSieveError(PrimrootError, ValueError):
    """No choice of sieving primes gives a positive delta."""


class NoThresholdError(PrimrootError, ValueError):
    """The inequality has no finite threshold for these parameters."""


class IterationError(PrimrootError, RuntimeError):
    """A fixed-point iteration failed to converge."""

    def __init__(self, message: str, trace: list[float]):
        super().__init__(f"{message} (last iterates: {trace[-5:]})")
        self.trace = trace

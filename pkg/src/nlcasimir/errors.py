"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the physical or mathematical domain of an operation."""


class ParseError(ValueError):
    """Malformed input file.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConvergenceError(RuntimeError):
    """A numerical scheme failed to reach its tolerance.

    The best available value is kept in ``last_estimate`` so callers can
    decide whether to accept it anyway.
    """

    def __init__(self, message, last_estimate=None):
        super().__init__(message)
        self.last_estimate = last_estimate


class UnsupportedOperationError(TypeError):
    """Operation is meaningless for the given model (e.g. permittivity of
    a perfect reflector)."""

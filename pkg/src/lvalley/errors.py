"""Exception types shared across the library."""


class InfeasibleError(Exception):
    """A request is physically or mathematically unattainable.

    Raised when the inputs are valid but the asked-for condition cannot be
    met, e.g. a valley crossover that would require a Ge fraction above 1,
    a strain sweep that never crosses, or the unbounded critical thickness
    of an unstrained film.  ``reason`` carries a short machine-readable tag
    so callers can branch without parsing the message.
    """

    def __init__(self, message: str, reason: str = ""):
        super().__init__(message)
        self.reason = reason


class SolverError(RuntimeError):
    """A numerical routine failed to converge; the message carries diagnostics."""

"""Exception types shared across the package."""

from __future__ import annotations


class ChoError(Exception):
    """Base class for all errors raised by this package."""


class NonConvergence(ChoError):
    """Eigensolver failed to reach the off-diagonal tolerance."""

    def __init__(self, sweeps: int, offdiag: float):
        self.sweeps = sweeps
        self.offdiag = offdiag
        super().__init__(
            f"Jacobi sweep limit reached after {sweeps} sweeps, "
            f"off-diagonal norm {offdiag:.3e}"
        )


class NotPositiveDefinite(ChoError):
    """A matrix required to be positive definite is not."""

    def __init__(self, min_eigenvalue: float, what: str = "matrix"):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"{what} is not positive definite "
            f"(smallest eigenvalue {min_eigenvalue:.6e})"
        )


class SingularMatrix(ChoError):
    """Determinant too small for a reliable inverse."""


class WrongDimension(ChoError):
    """An operation specific to one system size received another."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"operation requires n={expected}, model has n={got}")


class UnboundSystem(ChoError):
    """Spectrum requested for a system with a non-positive mode."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(
            f"mode {index} has non-positive squared frequency {value:.6e}; "
            "the energy spectrum is not discrete"
        )


class ConsistencyError(ChoError):
    """An internal residual check failed; results would be unreliable."""


class ParseError(ChoError):
    """A model file could not be read or does not match the schema."""


class ValidationError(ChoError):
    """A parsed model violates its own constraints."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid model: " + "; ".join(self.violations))

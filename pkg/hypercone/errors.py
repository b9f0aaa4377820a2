"""The errors raised by hypercone."""

import numpy as np


class NumericalError(ArithmeticError):
    """Raised when a computation breaks down numerically."""


class HyperbolicityError(NumericalError):
    """Raised when a univariate restriction has roots that are not real."""

    def __init__(self, message: str, coefficients: np.ndarray) -> None:
        super().__init__(f"{message} (coefficients: {coefficients.tolist()})")
        self.coefficients = coefficients


class CdExhaustedError(NumericalError):
    """Raised when the slice bound doubling gives up."""

    def __init__(self, message: str, diagnostics: dict[str, float]) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics


class NoFeasibleIterateError(RuntimeError):
    """Raised when a budget ran out before any feasible iterate was seen."""

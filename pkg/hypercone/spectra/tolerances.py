"""The tolerances for eigenvalue computations."""

from dataclasses import dataclass

_MAX_TOLERANCE = 1e-2


@dataclass(frozen=True)
class SpectraTolerances:
    """Tolerances for counting zero eigenvalues and accepting real roots."""

    zero_mult_tol: float = 1e-6
    imag_tol: float = 1e-6

    def __post_init__(self) -> None:
        for name, value in (
            ("zero_mult_tol", self.zero_mult_tol),
            ("imag_tol", self.imag_tol),
        ):
            if not 0.0 < value <= _MAX_TOLERANCE:
                raise ValueError(f"{name} must lie in (0, {_MAX_TOLERANCE}], got {value}")

"""The monomial term of a sparse polynomial."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Monomial:
    """A single term coefficient * prod(x_i ** exponents[i])."""

    exponents: tuple[int, ...]
    coefficient: float

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.exponents):
            raise ValueError(f"Negative exponent in monomial: {self.exponents}")
        if not math.isfinite(self.coefficient) or self.coefficient == 0.0:
            raise ValueError(
                f"Monomial coefficient must be finite and nonzero: {self.coefficient}"
            )

    @property
    def degree(self) -> int:
        """The total degree of the monomial."""
        return sum(self.exponents)

"""The configuration of the dual Frank-Wolfe solver."""

import math
from dataclasses import dataclass
from .._compat import StrEnum


class StepRule(StrEnum):
    """The step size rule."""

    DIMINISHING = "diminishing"
    EXACT = "exact"
    LIPSCHITZ = "lipschitz"


@dataclass(frozen=True)
class DFWConfig:
    """Settings for a dual Frank-Wolfe solve.

    c_d = None computes the slice bound from the program.
    """

    c_d: float | None = None
    cd_scale: float = 1.0
    step_rule: StepRule = StepRule.EXACT
    lipschitz: float | None = None
    fw_gap_tol: float = 1e-6
    feas_tol: float = 1e-8
    certificate_tol: float = 1e-6
    max_iters: int = 10000
    max_seconds: float = math.inf
    record_trace: bool = False
    record_iterates: bool = False

    def __post_init__(self) -> None:
        if self.c_d is not None and not self.c_d > 0.0:
            raise ValueError(f"c_d must be positive, got {self.c_d}")
        if not self.cd_scale > 0.0:
            raise ValueError(f"cd_scale must be positive, got {self.cd_scale}")
        if self.lipschitz is not None and not self.lipschitz > 0.0:
            raise ValueError(f"lipschitz must be positive, got {self.lipschitz}")
        for name in ("fw_gap_tol", "feas_tol", "certificate_tol", "max_seconds"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")

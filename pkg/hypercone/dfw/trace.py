"""Per-iteration records of a solve."""

from typing import NamedTuple

import numpy as np
import pandas as pd

TRACE_COLUMNS = ["k", "fw_gap", "primal_obj", "lambda_min", "alpha", "elapsed_s"]


class TraceRecord(NamedTuple):
    """One iteration of a solver."""

    k: int
    fw_gap: float
    primal_objective: float
    lambda_min_primal: float
    alpha: float
    elapsed_seconds: float


class BestIterate(NamedTuple):
    """The best feasible iterate seen so far."""

    iteration: int
    x: np.ndarray
    objective: float


class SolveTrace:
    """The records of a solve and its best feasible iterate."""

    def __init__(self) -> None:
        self._records: list[TraceRecord] = []
        self._iterates: list[np.ndarray] = []
        self._best: BestIterate | None = None

    @property
    def records(self) -> list[TraceRecord]:
        """The recorded iterations."""
        return self._records

    @property
    def iterates(self) -> list[np.ndarray]:
        """The recorded primal iterates, when they were kept."""
        return self._iterates

    @property
    def best_feasible(self) -> BestIterate | None:
        """The best feasible iterate, or None when no iterate was feasible."""
        return self._best

    def record(self, record: TraceRecord, x: np.ndarray | None = None) -> None:
        """Append an iteration and optionally its primal iterate."""
        self._records.append(record)
        if x is not None:
            self._iterates.append(x.copy())

    def offer(self, iteration: int, x: np.ndarray, objective: float) -> bool:
        """Keep x when it improves on the best feasible objective."""
        if self._best is not None and objective >= self._best.objective:
            return False
        self._best = BestIterate(iteration, x.copy(), objective)
        return True

    def to_frame(self) -> pd.DataFrame:
        """The records with the trace CSV column names."""
        return pd.DataFrame(
            [tuple(x) for x in self._records], columns=TRACE_COLUMNS
        ).astype({"k": np.int64})

    def to_csv(self, path: str) -> None:
        """Write the trace CSV."""
        self.to_frame().to_csv(path, index=False)

    def min_gap(self) -> np.ndarray:
        """The min-so-far FW gap after each recorded iteration."""
        return np.minimum.accumulate(np.array([x.fw_gap for x in self._records]))

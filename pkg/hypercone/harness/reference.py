"""Reference objective values and times for benchmarks."""

import logging
import time
from typing import Any

import numpy as np
import pandas as pd

from ..cache import MEMORY
from ..cones import cone_from_dict
from ..dfw import ConicProgram, DFWConfig, solve

REFERENCE_COLUMNS = ["instance_id", "objective", "seconds"]
REFERENCE_GAP_TOL = 1e-10
REFERENCE_MAX_ITERS = 200000
REFERENCE_MAX_SECONDS = 60.0


class ReferenceValues:
    """Per-instance reference objectives and solve times."""

    def __init__(self, df: pd.DataFrame) -> None:
        missing = set(REFERENCE_COLUMNS) - set(df.columns)
        if missing:
            raise ValueError(f"Reference values are missing columns {sorted(missing)}")
        try:
            df = df[REFERENCE_COLUMNS].astype(
                {"instance_id": np.int64, "objective": np.float64, "seconds": np.float64}
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"Reference values are not numeric: {exc}") from exc
        if df["instance_id"].duplicated().any():
            raise ValueError("Reference values repeat an instance_id")
        if not np.all(np.isfinite(df[["objective", "seconds"]].to_numpy())):
            raise ValueError("Reference values must be finite")
        if (df["seconds"] <= 0.0).any():
            raise ValueError("Reference seconds must be positive")
        self._df = df.set_index("instance_id")

    @property
    def df(self) -> pd.DataFrame:
        """The values indexed by instance_id."""
        return self._df

    def __len__(self) -> int:
        return len(self._df)

    def _row(self, instance_id: int) -> pd.Series:
        if instance_id not in self._df.index:
            raise ValueError(f"No reference value for instance {instance_id}")
        return self._df.loc[instance_id]

    def objective(self, instance_id: int) -> float:
        """The reference objective of an instance."""
        return float(self._row(instance_id)["objective"])

    def seconds(self, instance_id: int) -> float:
        """The reference solve time of an instance."""
        return float(self._row(instance_id)["seconds"])

    def to_csv(self, path: str) -> None:
        """Write the values in the reference CSV format."""
        self._df.reset_index().to_csv(path, index=False)


def load_reference(path: str) -> ReferenceValues:
    """Read a reference CSV with columns instance_id, objective, seconds."""
    try:
        df = pd.read_csv(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise ValueError(f"Malformed reference file {path}: {exc}") from exc
    return ReferenceValues(df)


def _reference_rows(
    cone_spec: dict[str, Any], instances: list[np.ndarray]
) -> list[tuple[int, float, float]]:
    cone = cone_from_dict(cone_spec)
    config = DFWConfig(
        fw_gap_tol=REFERENCE_GAP_TOL,
        max_iters=REFERENCE_MAX_ITERS,
        max_seconds=REFERENCE_MAX_SECONDS,
    )
    rows = []
    for instance_id, x0 in enumerate(instances):
        program = ConicProgram.projection(cone, x0)
        start = time.perf_counter()
        result = solve(program, config)
        seconds = time.perf_counter() - start
        if cone.has_closed_form_project:
            projected = cone.closed_form_project(x0)
            objective = 0.5 * float(np.sum((projected - x0) ** 2))
        elif result.objective is not None:
            objective = result.objective
        else:
            raise ValueError(f"The reference run found no feasible point for {instance_id}")
        logging.info(
            "Reference %d: objective=%.10g seconds=%.4f status=%s",
            instance_id,
            objective,
            seconds,
            result.status,
        )
        rows.append((instance_id, objective, seconds))
    return rows


_cached_reference_rows = MEMORY.cache(_reference_rows)


def self_reference(
    cone_spec: dict[str, Any], instances: list[np.ndarray], cached: bool = True
) -> ReferenceValues:
    """Reference values from long high-accuracy projection runs.

    The time is that of the dual Frank-Wolfe run. Cones with a closed-form
    projection take their objective from it.
    """
    rows = (_cached_reference_rows if cached else _reference_rows)(cone_spec, instances)
    return ReferenceValues(pd.DataFrame(rows, columns=REFERENCE_COLUMNS))

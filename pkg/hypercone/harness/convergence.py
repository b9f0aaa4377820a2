"""Convergence series for log-log plots."""

import logging
from typing import Sequence

import numpy as np
import pandas as pd

from ..dfw import SolveTrace
from .bench import FEASIBILITY_TOL

CONVERGENCE_COLUMNS = ["instance", "k", "fw_gap", "rel_obj", "feasible_found"]


def _relative_objective(frame: pd.DataFrame) -> np.ndarray:
    objective = frame["primal_obj"].to_numpy(dtype=np.float64)
    feasible = frame["lambda_min"].to_numpy(dtype=np.float64) >= -FEASIBILITY_TOL
    best_so_far = np.minimum.accumulate(np.where(feasible, objective, np.inf))
    best = best_so_far[-1]
    excess = best_so_far - best
    if best != 0.0:
        excess = excess / abs(best)
    return np.where(np.isfinite(best_so_far), excess, np.nan)


def export_convergence(
    traces: Sequence[SolveTrace], path: str | None = None
) -> pd.DataFrame:
    """The FW gap and relative objective of each recorded iteration.

    The relative objective is (min_{i<=k} f(x_i) - f_best) / f_best over
    feasible iterates, where f_best is the best feasible value in the trace.
    It is NaN before the first feasible iterate, and an absolute
    difference when f_best is zero.
    """
    frames = []
    for instance, trace in enumerate(traces):
        frame = trace.to_frame()
        found = bool((frame["lambda_min"] >= -FEASIBILITY_TOL).any())
        if not found:
            logging.warning("Trace %d has no feasible iterate", instance)
        frames.append(
            pd.DataFrame(
                {
                    "instance": instance,
                    "k": frame["k"],
                    "fw_gap": frame["fw_gap"],
                    "rel_obj": _relative_objective(frame) if found else np.nan,
                    "feasible_found": found,
                },
                columns=CONVERGENCE_COLUMNS,
            )
        )
    df = (
        pd.concat(frames, ignore_index=True)
        if frames
        else pd.DataFrame(columns=CONVERGENCE_COLUMNS)
    )
    if path is not None:
        df.to_csv(path, index=False)
    return df

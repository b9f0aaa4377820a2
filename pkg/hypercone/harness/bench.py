"""Benchmarks against reference objective values."""

# pylint: disable=too-many-arguments,too-many-positional-arguments
import logging
import os
from dataclasses import dataclass, replace
from .._compat import StrEnum
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed  # type: ignore
from tqdm import tqdm

from ..agm import AGMConfig, agm_baseline
from ..cones import ConeOracle, HyperbolicityCone
from ..dfw import ConicProgram, DFWConfig, SolveTrace, solve
from .reference import ReferenceValues

THREADS_ENV = "HYPERCONE_THREADS"
FEASIBILITY_TOL = 1e-8
SUMMARY_COLUMNS = [
    "error_level",
    "success_pct",
    "solved",
    "rel_time_mean",
    "rel_time_std_sample",
    "iterations_mean",
    "iterations_std_sample",
]
ROW_COLUMNS = ["instance_id", "error_level", "success", "iteration", "seconds", "rel_time"]


class SolverKind(StrEnum):
    """The solver a benchmark runs."""

    DFW = "dfw"
    AGM = "agm"


@dataclass(frozen=True)
class ErrorTargetReport:
    """Per-error-level summaries and the per-instance rows behind them.

    Means and sample standard deviations are taken over successful
    instances only.
    """

    summary: pd.DataFrame
    rows: pd.DataFrame

    def to_csv(self, path: str) -> None:
        """Write the summary to path and the rows to <stem>.instances.csv."""
        target = Path(path)
        self.summary.to_csv(target, index=False)
        self.rows.to_csv(target.with_name(target.stem + ".instances.csv"), index=False)


def bench_threads() -> int:
    """The worker thread count from the environment."""
    value = os.environ.get(THREADS_ENV, "1")
    try:
        threads = int(value)
    except ValueError as exc:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {value}") from exc
    if threads < 1:
        raise ValueError(f"{THREADS_ENV} must be at least 1, got {threads}")
    return threads


def _run_solver(
    cone: ConeOracle,
    x0: np.ndarray,
    solver: SolverKind,
    dfw_config: DFWConfig,
    agm_config: AGMConfig,
    max_seconds: float,
) -> SolveTrace:
    match solver:
        case SolverKind.DFW:
            config = replace(
                dfw_config,
                record_trace=True,
                max_seconds=min(dfw_config.max_seconds, max_seconds),
            )
            return solve(ConicProgram.projection(cone, x0), config).trace
        case SolverKind.AGM:
            if not isinstance(cone, HyperbolicityCone):
                raise ValueError("The agm solver needs a hyperbolicity cone")
            config_agm = replace(
                agm_config,
                record_trace=True,
                max_seconds=min(agm_config.max_seconds, max_seconds),
            )
            return agm_baseline(cone, x0, config_agm).trace
    raise ValueError(f"Unrecognised solver: {solver}")


def _instance_rows(
    instance_id: int,
    trace: SolveTrace,
    reference: ReferenceValues,
    error_levels: Sequence[float],
) -> list[tuple[int, float, bool, float, float, float]]:
    frame = trace.to_frame()
    feasible = frame[frame["lambda_min"] >= -FEASIBILITY_TOL]
    target = reference.objective(instance_id)
    ref_seconds = reference.seconds(instance_id)
    rows = []
    for error_level in error_levels:
        bound = target + abs(target) * error_level / 100.0
        hits = feasible[feasible["primal_obj"] <= bound]
        if hits.empty:
            logging.warning(
                "Instance %d missed error level %g%%", instance_id, error_level
            )
            rows.append((instance_id, error_level, False, np.nan, np.nan, np.nan))
            continue
        first = hits.iloc[0]
        seconds = float(first["elapsed_s"])
        rows.append(
            (
                instance_id,
                error_level,
                True,
                float(first["k"]) + 1.0,
                seconds,
                seconds / ref_seconds,
            )
        )
    return rows


def summarise(rows: pd.DataFrame, error_levels: Sequence[float]) -> pd.DataFrame:
    """Summarise per-instance rows by error level."""
    summary = []
    for error_level in error_levels:
        level = rows[rows["error_level"] == error_level]
        solved = level[level["success"]]
        summary.append(
            (
                error_level,
                100.0 * len(solved) / len(level) if len(level) else 0.0,
                len(solved),
                solved["rel_time"].mean(),
                solved["rel_time"].std(ddof=1),
                solved["iteration"].mean(),
                solved["iteration"].std(ddof=1),
            )
        )
    return pd.DataFrame(summary, columns=SUMMARY_COLUMNS)


def run_bench(
    cone: ConeOracle,
    instances: Sequence[np.ndarray],
    reference: ReferenceValues,
    error_levels: Sequence[float],
    solver: SolverKind = SolverKind.DFW,
    dfw_config: DFWConfig = DFWConfig(),
    agm_config: AGMConfig = AGMConfig(),
    budget_factor: float | None = 1.0,
) -> tuple[ErrorTargetReport, list[SolveTrace]]:
    """Project every instance and time when each error level is first met.

    An instance meets error level E at the first iterate with minimum
    eigenvalue at least -1e-8 and objective at most f_ref + |f_ref| E / 100.
    Each solve runs for at most budget_factor times the reference seconds,
    or without a time limit when budget_factor is None.
    """
    if not error_levels:
        raise ValueError("At least one error level is required")
    if any(not x > 0.0 for x in error_levels):
        raise ValueError(f"Error levels must be positive, got {list(error_levels)}")
    if budget_factor is not None and not budget_factor > 0.0:
        raise ValueError(f"budget_factor must be positive, got {budget_factor}")

    def budget(instance_id: int) -> float:
        if budget_factor is None:
            return np.inf
        return budget_factor * reference.seconds(instance_id)

    missing = [x for x in range(len(instances)) if x not in reference.df.index]
    if missing:
        raise ValueError(f"No reference values for instances {missing}")
    logging.info("Benchmarking %d instances with %s", len(instances), solver)
    traces = list(
        tqdm(
            Parallel(n_jobs=bench_threads(), prefer="threads", return_as="generator")(
                delayed(_run_solver)(
                    cone, x0, solver, dfw_config, agm_config, budget(instance_id)
                )
                for instance_id, x0 in enumerate(instances)
            ),
            total=len(instances),
            desc="bench",
        )
    )
    rows = [
        row
        for instance_id, trace in enumerate(traces)
        for row in _instance_rows(instance_id, trace, reference, error_levels)
    ]
    frame = pd.DataFrame(rows, columns=ROW_COLUMNS)
    return ErrorTargetReport(summarise(frame, error_levels), frame), traces

"""Benchmarks over multiples of the slice bound."""

# pylint: disable=too-many-arguments,too-many-positional-arguments
import logging
from dataclasses import replace
from typing import Sequence

import numpy as np

from ..cones import ConeOracle
from ..dfw import DFWConfig
from .bench import ErrorTargetReport, SolverKind, run_bench
from .reference import ReferenceValues

CD_MULTIPLIERS = (1.0, 2.0, 4.0, 8.0, 16.0, 100.0)


def run_cd_sensitivity(
    cone: ConeOracle,
    instances: Sequence[np.ndarray],
    reference: ReferenceValues,
    error_levels: Sequence[float],
    multipliers: Sequence[float] = CD_MULTIPLIERS,
    dfw_config: DFWConfig = DFWConfig(),
    budget_factor: float | None = None,
) -> dict[float, ErrorTargetReport]:
    """Run the dual Frank-Wolfe benchmark with the slice bound scaled by each multiplier."""
    reports = {}
    for multiplier in multipliers:
        logging.info("Slice bound multiplier %g", multiplier)
        report, _ = run_bench(
            cone,
            instances,
            reference,
            error_levels,
            SolverKind.DFW,
            replace(dfw_config, cd_scale=dfw_config.cd_scale * multiplier),
            budget_factor=budget_factor,
        )
        reports[float(multiplier)] = report
    return reports

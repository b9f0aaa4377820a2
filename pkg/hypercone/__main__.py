"""The CLI for projecting onto hyperbolicity cones."""

# pylint: disable=too-many-statements,too-many-branches
import argparse
import json
import logging
import os
import sys
from typing import Any

import numpy as np
import pandas as pd

from . import __VERSION__
from .agm import AGMConfig, agm_baseline
from .cones import HyperbolicityCone, load_cone
from .dfw import (ConicProgram, DFWConfig, SolveResult, StepRule, auto_cd,
                  load_problem)
from .errors import NoFeasibleIterateError, NumericalError
from .function import Function
from .harness import (ErrorTargetReport, SolverKind, export_convergence,
                      gen_instances, load_instance_spec, load_reference,
                      run_bench, run_cd_sensitivity, self_reference)
from .hypercone import Hypercone
from .loglevel import LogLevel
from .polyform import load_poly

EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL_FAILURE = 3
EXIT_NO_FEASIBLE_ITERATE = 4
_AUTO_CD = "auto"


def _parse_floats(text: str, name: str) -> list[float]:
    if os.path.isfile(text):
        with open(text, encoding="utf8") as handle:
            text = handle.read()
    try:
        return [float(x) for x in text.replace("\n", ",").split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"{name} must be comma-separated floats: {exc}") from exc


def _parse_vector(text: str | None, name: str) -> np.ndarray:
    if text is None:
        raise ValueError(f"--{name} is required")
    values = _parse_floats(text, name)
    if not values:
        raise ValueError(f"--{name} is empty")
    return np.array(values)


def _require(value: str | None, name: str) -> str:
    if value is None:
        raise ValueError(f"--{name} is required")
    return value


def _dfw_config(args: argparse.Namespace) -> DFWConfig:
    c_d = None
    if args.cd is not None and args.cd != _AUTO_CD:
        try:
            c_d = float(args.cd)
        except ValueError as exc:
            raise ValueError(f"--cd must be 'auto' or a float, got {args.cd}") from exc
    return DFWConfig(
        c_d=c_d,
        step_rule=args.step,
        fw_gap_tol=args.tol,
        max_iters=args.max_iters,
        max_seconds=args.max_seconds,
        record_trace=args.trace is not None,
    )


def _vector(x: np.ndarray | None) -> list[float] | None:
    return None if x is None else [float(v) for v in x]


def _solve_payload(result: SolveResult, trace: str | None) -> dict[str, Any]:
    if result.x_best is None:
        raise NoFeasibleIterateError(
            f"No feasible iterate after {result.iterations} iterations ({result.status})"
        )
    if trace is not None:
        result.trace.to_csv(trace)
    return {
        "x": _vector(result.x_best),
        "y": _vector(result.y_last),
        "objective": result.objective,
        "status": str(result.status),
        "c_d": result.c_d,
        "iterations": result.iterations,
        "fw_gap": result.fw_gap,
    }


def _run_dfw(
    hypercone: Hypercone, program: ConicProgram, args: argparse.Namespace
) -> dict[str, Any]:
    config = _dfw_config(args)
    if args.cd == _AUTO_CD:
        certified = auto_cd(program, config)
        if args.trace is not None:
            certified.result.trace.to_csv(args.trace)
        return {
            "x": _vector(certified.x),
            "y": _vector(certified.y),
            "objective": program.objective.value(certified.x),
            "status": str(certified.result.status),
            "c_d": certified.c_d,
            "iterations": certified.result.iterations,
            "fw_gap": certified.result.fw_gap,
            "doublings": certified.doublings,
            "duality_gap": certified.duality_gap,
        }
    return _solve_payload(hypercone.solve(program, config), args.trace)


def _run_agm(
    cone: HyperbolicityCone, x0: np.ndarray, args: argparse.Namespace
) -> dict[str, Any]:
    result = agm_baseline(
        cone,
        x0,
        AGMConfig(mu=args.mu, max_iters=args.max_iters, max_seconds=args.max_seconds),
    )
    if args.trace is not None:
        result.trace.to_csv(args.trace)
    return {
        "x": _vector(result.x),
        "objective": result.objective,
        "status": str(result.status),
        "iterations": result.iterations,
        "mu": result.mu,
        "label": result.label,
    }


def _write_json(payload: dict[str, Any], output: str | None) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")
    if output is not None:
        with open(output, "w", encoding="utf8") as handle:
            json.dump(payload, handle)


def _bench(args: argparse.Namespace) -> None:
    spec = load_instance_spec(_require(args.instances, "instances"))
    cone = spec.build_cone()
    instances = gen_instances(spec)
    if args.reference is not None:
        reference = load_reference(args.reference)
    else:
        logging.info("No reference file; running self-reference solves")
        reference = self_reference(spec.cone, instances)
    if args.cd == _AUTO_CD:
        raise ValueError("--cd auto is not supported for bench")
    config = _dfw_config(args)
    error_levels = _parse_floats(args.errors, "errors")
    if args.cd_multipliers is not None:
        reports = run_cd_sensitivity(
            cone,
            instances,
            reference,
            error_levels,
            _parse_floats(args.cd_multipliers, "cd-multipliers"),
            config,
        )
        report = ErrorTargetReport(
            pd.concat(
                [x.summary.assign(multiplier=m) for m, x in reports.items()],
                ignore_index=True,
            ),
            pd.concat(
                [x.rows.assign(multiplier=m) for m, x in reports.items()],
                ignore_index=True,
            ),
        )
    else:
        report, traces = run_bench(
            cone, instances, reference, error_levels, args.solver, config,
            AGMConfig(mu=args.mu, max_iters=args.max_iters, max_seconds=args.max_seconds),
        )
        if args.convergence is not None:
            export_convergence(traces, args.convergence)
    if args.out is not None:
        report.to_csv(args.out)
    sys.stdout.write(report.summary.to_csv(index=False))


def _run(args: argparse.Namespace) -> None:
    hypercone = Hypercone()
    match args.function:
        case Function.EIG:
            poly = load_poly(_require(args.poly, "poly"))
            x = _parse_vector(args.x, "x")
            e = None if args.e is None else _parse_vector(args.e, "e")
            values = hypercone.eigenvalues(poly, x, e)
            sys.stdout.write(",".join(f"{v:.17g}" for v in values) + "\n")
        case Function.PROJECT:
            cone = load_cone(_require(args.cone, "cone"))
            x0 = _parse_vector(args.point, "point")
            if args.solver == SolverKind.AGM:
                if not isinstance(cone, HyperbolicityCone):
                    raise ValueError("--solver agm needs a hyperbolicity cone")
                payload = _run_agm(cone, x0, args)
            else:
                payload = _run_dfw(hypercone, ConicProgram.projection(cone, x0), args)
            _write_json(payload, args.output)
        case Function.SOLVE:
            if args.solver == SolverKind.AGM:
                raise ValueError("--solver agm only supports projections")
            program = load_problem(_require(args.problem, "problem"))
            _write_json(_run_dfw(hypercone, program, args), args.output)
        case Function.BENCH:
            _bench(args)
        case _:
            raise ValueError(f"Unrecognised function: {args.function}")


def main() -> None:
    """The main CLI function."""
    logging.basicConfig()
    logger = logging.getLogger()
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--loglevel",
        default=LogLevel.INFO,
        choices=list(LogLevel),
        help="The loglevel to display logs at.",
        required=False,
    )
    parser.add_argument("--poly", help="The polynomial JSON file.", required=False)
    parser.add_argument("--x", help="The point to take eigenvalues of.", required=False)
    parser.add_argument(
        "--e", help="The hyperbolicity direction, the ones vector by default.", required=False
    )
    parser.add_argument("--cone", help="The cone JSON file.", required=False)
    parser.add_argument("--point", help="The point to project.", required=False)
    parser.add_argument("--problem", help="The conic program JSON file.", required=False)
    parser.add_argument(
        "--cd",
        help="The slice bound: 'auto' or a float. Computed from the program when absent.",
        required=False,
    )
    parser.add_argument(
        "--step",
        default=StepRule.EXACT,
        type=StepRule,
        choices=list(StepRule),
        help="The step size rule.",
        required=False,
    )
    parser.add_argument(
        "--tol", default=1e-6, type=float, help="The FW gap tolerance.", required=False
    )
    parser.add_argument(
        "--max-iters",
        default=10000,
        type=int,
        help="The iteration budget.",
        required=False,
    )
    parser.add_argument(
        "--max-seconds",
        default=float("inf"),
        type=float,
        help="The time budget in seconds.",
        required=False,
    )
    parser.add_argument("--trace", help="The trace CSV to write.", required=False)
    parser.add_argument(
        "--solver",
        default=SolverKind.DFW,
        type=SolverKind,
        choices=list(SolverKind),
        help="The solver to use.",
        required=False,
    )
    parser.add_argument(
        "--mu", default=1e-3, type=float, help="The smoothing parameter.", required=False
    )
    parser.add_argument(
        "--output",
        help="The file to use as the output.",
        required=False,
    )
    parser.add_argument("--instances", help="The instance spec JSON file.", required=False)
    parser.add_argument("--reference", help="The reference values CSV.", required=False)
    parser.add_argument(
        "--errors",
        default="10,1,0.5,0.1",
        help="The error levels in percent.",
        required=False,
    )
    parser.add_argument("--out", help="The report CSV to write.", required=False)
    parser.add_argument(
        "--convergence", help="The convergence CSV to write.", required=False
    )
    parser.add_argument(
        "--cd-multipliers",
        help="Run the benchmark once per multiple of the slice bound.",
        required=False,
    )
    parser.add_argument(
        "function",
        choices=list(Function),
        help="The main function for hypercone to perform.",
    )
    args = parser.parse_args()

    match args.loglevel:
        case LogLevel.DEBUG:
            logger.setLevel(logging.DEBUG)
        case LogLevel.INFO:
            logger.setLevel(logging.INFO)
        case LogLevel.WARN:
            logger.setLevel(logging.WARN)
        case LogLevel.ERROR:
            logger.setLevel(logging.ERROR)
        case _:
            raise ValueError(f"Unrecognised loglevel: {args.loglevel}")

    logging.info("--- hypercone %s ---", __VERSION__)

    try:
        _run(args)
    except (ValueError, OSError) as exc:
        logging.error("%s", exc)
        sys.exit(EXIT_INVALID_INPUT)
    except NumericalError as exc:
        logging.error("%s", exc)
        sys.exit(EXIT_NUMERICAL_FAILURE)
    except NoFeasibleIterateError as exc:
        logging.error("%s", exc)
        sys.exit(EXIT_NO_FEASIBLE_ITERATE)


if __name__ == "__main__":
    main()

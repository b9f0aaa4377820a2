"""The benchmark harness."""

# ruff: noqa: F401
from .bench import (ROW_COLUMNS, SUMMARY_COLUMNS, ErrorTargetReport,
                    SolverKind, bench_threads, run_bench, summarise)
from .convergence import CONVERGENCE_COLUMNS, export_convergence
from .instances import InstanceSpec, gen_instances, load_instance_spec
from .reference import (REFERENCE_COLUMNS, ReferenceValues, load_reference,
                        self_reference)
from .sensitivity import CD_MULTIPLIERS, run_cd_sensitivity

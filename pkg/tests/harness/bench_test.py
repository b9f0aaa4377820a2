"""Tests for the error target benchmarks."""
import math
import os
import shutil
import tempfile
import unittest
from unittest import mock

import numpy as np
import pandas as pd

from hypercone.agm.baseline import AGMConfig
from hypercone.cones.hyperbolicity_cone import DerivativeRelaxation
from hypercone.cones.orthant import OrthantCone
from hypercone.harness.bench import (ROW_COLUMNS, SUMMARY_COLUMNS, THREADS_ENV, SolverKind,
                                     bench_threads, run_bench, summarise)
from hypercone.harness.instances import InstanceSpec, gen_instances
from hypercone.harness.reference import ReferenceValues


def closed_form_reference(instances, shift=0.0):
    return ReferenceValues(
        pd.DataFrame(
            {
                "instance_id": list(range(len(instances))),
                "objective": [0.5 * float(np.sum(np.minimum(x, 0.0) ** 2)) + shift for x in instances],
                "seconds": [1.0] * len(instances),
            }
        )
    )


class TestBench(unittest.TestCase):

    def setUp(self):
        self._folder = tempfile.mkdtemp()
        self.cone = OrthantCone(5)
        self.instances = gen_instances(InstanceSpec({"kind": "orthant", "n": 5}, 9, 10))

    def tearDown(self):
        shutil.rmtree(self._folder)

    def test_all_solved(self):
        report, traces = run_bench(
            self.cone, self.instances, closed_form_reference(self.instances), [1.0, 0.1],
            budget_factor=None,
        )
        self.assertEqual(len(traces), 10)
        self.assertListEqual(list(report.summary.columns), SUMMARY_COLUMNS)
        self.assertListEqual(list(report.rows.columns), ROW_COLUMNS)
        self.assertEqual(len(report.rows), 20)
        self.assertListEqual(report.summary["success_pct"].tolist(), [100.0, 100.0])
        self.assertListEqual(report.summary["solved"].tolist(), [10, 10])
        self.assertTrue((report.rows["iteration"] >= 1.0).all())
        self.assertTrue((report.rows["rel_time"] > 0.0).all())

    def test_unreachable_reference(self):
        with self.assertLogs(level="WARNING"):
            report, _ = run_bench(
                self.cone, self.instances, closed_form_reference(self.instances, -1.0), [1.0],
                budget_factor=None,
            )
        self.assertEqual(report.summary["success_pct"].iloc[0], 0.0)
        self.assertEqual(report.summary["solved"].iloc[0], 0)
        self.assertTrue(math.isnan(report.summary["rel_time_mean"].iloc[0]))
        self.assertFalse(report.rows["success"].any())

    def test_missing_reference(self):
        with self.assertRaises(ValueError):
            run_bench(self.cone, self.instances, closed_form_reference(self.instances[:5]), [1.0])

    def test_error_levels(self):
        reference = closed_form_reference(self.instances)
        with self.assertRaises(ValueError):
            run_bench(self.cone, self.instances, reference, [])
        with self.assertRaises(ValueError):
            run_bench(self.cone, self.instances, reference, [0.0])
        with self.assertRaises(ValueError):
            run_bench(self.cone, self.instances, reference, [1.0], budget_factor=0.0)

    def test_agm(self):
        instances = [
            np.array([-1.0, 2.0, 0.5, -0.7, 1.0]),
            np.array([-2.0, -1.0, 1.0, 1.0, 1.0]),
            np.array([0.3, -1.5, 2.0, 1.0, -0.8]),
        ]
        report, _ = run_bench(
            DerivativeRelaxation(5, 0),
            instances,
            closed_form_reference(instances),
            [10.0],
            SolverKind.AGM,
            agm_config=AGMConfig(max_iters=2000),
            budget_factor=None,
        )
        self.assertEqual(report.summary["success_pct"].iloc[0], 100.0)

    def test_agm_needs_polynomial(self):
        with self.assertRaises(ValueError):
            run_bench(
                self.cone,
                self.instances,
                closed_form_reference(self.instances),
                [1.0],
                SolverKind.AGM,
            )

    def test_to_csv(self):
        report, _ = run_bench(
            self.cone, self.instances[:2], closed_form_reference(self.instances[:2]), [1.0],
            budget_factor=None,
        )
        path = os.path.join(self._folder, "report.csv")
        report.to_csv(path)
        self.assertEqual(len(pd.read_csv(path)), 1)
        self.assertEqual(len(pd.read_csv(os.path.join(self._folder, "report.instances.csv"))), 2)

    def test_summarise(self):
        rows = pd.DataFrame(
            [
                (0, 1.0, True, 2.0, 0.1, 1.0),
                (1, 1.0, True, 4.0, 0.3, 3.0),
                (2, 1.0, False, np.nan, np.nan, np.nan),
            ],
            columns=ROW_COLUMNS,
        )
        summary = summarise(rows, [1.0])
        self.assertAlmostEqual(summary["success_pct"].iloc[0], 200.0 / 3.0)
        self.assertAlmostEqual(summary["rel_time_mean"].iloc[0], 2.0)
        self.assertAlmostEqual(summary["rel_time_std_sample"].iloc[0], math.sqrt(2.0))
        self.assertAlmostEqual(summary["iterations_mean"].iloc[0], 3.0)

    def test_threads(self):
        with mock.patch.dict(os.environ, {THREADS_ENV: "3"}):
            self.assertEqual(bench_threads(), 3)
        with mock.patch.dict(os.environ, {THREADS_ENV: "0"}):
            with self.assertRaises(ValueError):
                bench_threads()
        with mock.patch.dict(os.environ, {THREADS_ENV: "many"}):
            with self.assertRaises(ValueError):
                bench_threads()
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(bench_threads(), 1)

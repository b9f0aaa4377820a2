"""Tests for the convergence export."""
import math
import os
import shutil
import tempfile
import unittest

import numpy as np
import pandas as pd
from numpy.testing import assert_allclose

from hypercone.cones.hyperbolicity_cone import DerivativeRelaxation
from hypercone.cones.orthant import OrthantCone
from hypercone.dfw.config import DFWConfig
from hypercone.dfw.conic_program import ConicProgram
from hypercone.dfw.solver import solve
from hypercone.dfw.trace import SolveTrace, TraceRecord
from hypercone.harness.convergence import CONVERGENCE_COLUMNS, export_convergence


class TestConvergence(unittest.TestCase):

    def setUp(self):
        self._folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self._folder)

    def test_relative_objective(self):
        trace = SolveTrace()
        for k, (objective, lam) in enumerate([(5.0, -1.0), (4.0, 0.0), (3.0, 0.1), (3.5, 0.0), (2.0, 0.0)]):
            trace.record(TraceRecord(k, 1.0 / (k + 1), objective, lam, 0.5, 0.1 * k))
        df = export_convergence([trace])
        self.assertListEqual(list(df.columns), CONVERGENCE_COLUMNS)
        assert_allclose(df["rel_obj"].to_numpy(), [np.nan, 1.0, 0.5, 0.5, 0.0])
        self.assertTrue(df["feasible_found"].all())

    def test_solver_traces(self):
        rng = np.random.default_rng(3)
        cone = DerivativeRelaxation(6, 2)
        traces = [
            solve(
                ConicProgram.projection(cone, rng.standard_normal(6) - 1.0),
                DFWConfig(max_iters=300, record_trace=True),
            ).trace
            for _ in range(3)
        ]
        path = os.path.join(self._folder, "convergence.csv")
        df = export_convergence(traces, path)
        self.assertEqual(len(df), sum(len(x.records) for x in traces))
        self.assertListEqual(sorted(df["instance"].unique().tolist()), [0, 1, 2])
        self.assertEqual(len(pd.read_csv(path)), len(df))
        for _, group in df.groupby("instance"):
            if group["feasible_found"].iloc[0]:
                self.assertEqual(group["rel_obj"].iloc[-1], 0.0)
                rel_obj = group["rel_obj"].dropna().to_numpy()
                self.assertTrue(np.all(np.diff(rel_obj) <= 0.0))

    def test_no_feasible_iterate(self):
        with self.assertLogs(level="WARNING"):
            trace = solve(
                ConicProgram.projection(OrthantCone(2), np.array([-5.0, 1.0])),
                DFWConfig(c_d=0.1, record_trace=True),
            ).trace
            df = export_convergence([trace])
        self.assertFalse(df["feasible_found"].any())
        self.assertTrue(all(math.isnan(x) for x in df["rel_obj"]))

    def test_large_polynomial(self):
        x0 = 1e3 * (np.random.default_rng(13).standard_normal(20) - 1.0)
        trace = solve(
            ConicProgram.projection(DerivativeRelaxation(20, 10), x0),
            DFWConfig(max_iters=200, max_seconds=30.0, record_trace=True),
        ).trace
        min_gap = trace.min_gap()
        self.assertTrue(np.all(np.isfinite(min_gap)))
        self.assertLess(min_gap[-1], min_gap[0])
        df = export_convergence([trace])
        self.assertEqual(len(df), len(trace.records))
        self.assertTrue(np.all(np.isfinite(df["fw_gap"])))

"""Tests for the slice bound sensitivity benchmark."""
import unittest

import numpy as np
import pandas as pd

from hypercone.cones.orthant import OrthantCone
from hypercone.dfw.config import DFWConfig
from hypercone.harness.instances import InstanceSpec, gen_instances
from hypercone.harness.reference import ReferenceValues
from hypercone.harness.sensitivity import CD_MULTIPLIERS, run_cd_sensitivity


def _projection_reference(instances):
    return ReferenceValues(
        pd.DataFrame(
            {
                "instance_id": list(range(len(instances))),
                "objective": [0.5 * float(np.sum(np.minimum(x, 0.0) ** 2)) for x in instances],
                "seconds": [1.0] * len(instances),
            }
        )
    )


class TestSensitivity(unittest.TestCase):

    def test_multipliers(self):
        instances = gen_instances(InstanceSpec({"kind": "orthant", "n": 4}, 5, 4))
        reports = run_cd_sensitivity(
            OrthantCone(4), instances, _projection_reference(instances), [1.0], (1.0, 4.0)
        )
        self.assertListEqual(sorted(reports), [1.0, 4.0])
        for report in reports.values():
            self.assertEqual(report.summary["success_pct"].iloc[0], 100.0)

    def test_every_multiplier_succeeds(self):
        instances = gen_instances(InstanceSpec({"kind": "orthant", "n": 10}, 11, 10))
        reports = run_cd_sensitivity(
            OrthantCone(10),
            instances,
            _projection_reference(instances),
            [1.0],
            dfw_config=DFWConfig(fw_gap_tol=1e-8),
        )
        self.assertListEqual(sorted(reports), list(CD_MULTIPLIERS))
        for report in reports.values():
            self.assertEqual(report.summary["success_pct"].iloc[0], 100.0)
            self.assertEqual(int(report.summary["solved"].iloc[0]), 10)

"""Tests for the cone JSON specifications."""
import json
import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose

from hypercone.cones.cone_spec import cone_from_dict, load_cone
from hypercone.cones.hyperbolicity_cone import DerivativeRelaxation, HyperbolicityCone
from hypercone.cones.orthant import OrthantCone
from hypercone.cones.p_cone import PCone


class TestConeSpec(unittest.TestCase):

    def test_hyperbolicity(self):
        cone = cone_from_dict({"kind": "hyperbolicity", "poly": {"elesym": {"n": 3, "k": 2}}})
        self.assertIsInstance(cone, HyperbolicityCone)
        assert_allclose(cone.e, np.ones(3))
        self.assertFalse(cone.isometric)

    def test_hyperbolicity_with_direction(self):
        cone = cone_from_dict(
            {
                "kind": "hyperbolicity",
                "poly": {"factors": [[1.0, 0.0], [0.0, 1.0]]},
                "e": [1.0, 2.0],
                "isometric": True,
            }
        )
        assert_allclose(cone.e, [1.0, 2.0])
        self.assertTrue(cone.has_closed_form_project)

    def test_other_kinds(self):
        self.assertIsInstance(cone_from_dict({"kind": "pcone", "p": 3, "n": 4}), PCone)
        self.assertIsInstance(cone_from_dict({"kind": "orthant", "n": 4}), OrthantCone)
        relaxation = cone_from_dict({"kind": "derivative_orthant", "n": 10, "k": 1})
        self.assertIsInstance(relaxation, DerivativeRelaxation)
        self.assertEqual(relaxation.hp.d, 9)

    def test_malformed(self):
        with self.assertRaises(ValueError):
            cone_from_dict({"kind": "pcone", "p": 3})
        with self.assertRaises(ValueError):
            cone_from_dict({"kind": "simplex", "n": 3})
        with self.assertRaises(ValueError):
            cone_from_dict({"n": 3})

    def test_load_cone(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "cone.json")
            with open(path, "w", encoding="utf8") as handle:
                json.dump({"kind": "orthant", "n": 2}, handle)
            self.assertEqual(load_cone(path).dim, 2)

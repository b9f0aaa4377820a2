"""Tests for the p-cone oracle."""
import unittest

import numpy as np
from numpy.testing import assert_allclose

from hypercone.cones.cone_oracle import unit
from hypercone.cones.p_cone import PCone, pcone_conjugate_vector, pcone_lambda_min, pcone_project


def boundary_point(cone, rng):
    tail = rng.standard_normal(cone.n)
    return np.concatenate(([np.sum(np.abs(tail) ** cone.p) ** (1.0 / cone.p)], tail))


class TestPCone(unittest.TestCase):

    def setUp(self):
        self.cone = PCone(3.0, 2)

    def test_lambda_min(self):
        self.assertAlmostEqual(
            pcone_lambda_min(self.cone, np.array([5.0, 3.0, 4.0])), 5.0 - 91.0 ** (1.0 / 3.0)
        )

    def test_conjugate_vector(self):
        tau = 91.0 ** (1.0 / 3.0)
        z = np.array([tau, 3.0, 4.0])
        conjugate = pcone_conjugate_vector(self.cone, z)
        assert_allclose(conjugate, [tau**2, -9.0, -16.0])
        self.assertAlmostEqual(float(np.dot(conjugate, z)), 0.0, places=9)
        self.assertAlmostEqual(self.cone.dual_lambda_min(conjugate), 0.0, places=9)

    def test_conjugate_vector_at_origin(self):
        assert_allclose(pcone_conjugate_vector(self.cone, np.zeros(3)), [1.0, 0.0, 0.0])

    def test_conjugate_vectors_are_dual_and_orthogonal(self):
        rng = np.random.default_rng(8)
        for p in (1.3, 3.0):
            cone = PCone(p, 100)
            for _ in range(30):
                z = boundary_point(cone, rng)
                conjugate = pcone_conjugate_vector(cone, z)
                scale = np.linalg.norm(conjugate)
                self.assertLessEqual(abs(np.dot(conjugate, z)) / (scale * np.linalg.norm(z)), 1e-8)
                self.assertGreaterEqual(cone.dual_lambda_min(conjugate) / scale, -1e-10)
                assert_allclose(np.linalg.norm(cone.conjugate_vector(z)), 1.0)

    def test_off_boundary(self):
        with self.assertRaises(ValueError):
            pcone_conjugate_vector(self.cone, np.array([10.0, 3.0, 4.0]))

    def test_project_second_order_cone(self):
        cone = PCone(2.0, 3)
        x = np.array([1.0, 3.0, 0.0, 4.0])
        radius = 5.0
        expected = 0.5 * (1.0 + radius) * np.array([1.0, 3.0 / radius, 0.0, 4.0 / radius])
        assert_allclose(pcone_project(cone, x), expected, atol=1e-10)

    def test_project_satisfies_optimality(self):
        rng = np.random.default_rng(4)
        for p in (1.3, 3.0):
            cone = PCone(p, 10)
            for _ in range(10):
                x = rng.standard_normal(11)
                x[0] = -abs(x[0]) * 0.1
                y = pcone_project(cone, x)
                if not np.any(y):
                    continue
                self.assertLessEqual(abs(cone.lambda_min(y)), 1e-9 * (1.0 + np.linalg.norm(y)))
                assert_allclose(unit(y - x), cone.conjugate_vector(y), atol=1e-6)

    def test_project_shortcuts(self):
        inside = np.array([10.0, 3.0, 4.0])
        assert_allclose(pcone_project(self.cone, inside), inside)
        polar = np.array([-10.0, 1.0, 1.0])
        assert_allclose(pcone_project(self.cone, polar), np.zeros(3))

    def test_dual(self):
        dual = self.cone.dual()
        self.assertAlmostEqual(dual.p, 1.5)
        self.assertAlmostEqual(dual.dual().p, 3.0)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            PCone(1.0, 3)
        with self.assertRaises(ValueError):
            PCone(2.0, 0)

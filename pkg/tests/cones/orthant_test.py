"""Tests for the orthant cone oracle."""
import unittest

import numpy as np
from numpy.testing import assert_allclose

from hypercone.cones.orthant import OrthantCone


class TestOrthantCone(unittest.TestCase):

    def setUp(self):
        self.cone = OrthantCone(3)

    def test_lambda_min(self):
        self.assertEqual(self.cone.lambda_min(np.array([2.0, -1.0, 3.0])), -1.0)

    def test_conjugate_vector_picks_first_minimum(self):
        assert_allclose(self.cone.conjugate_vector(np.array([1.0, 0.0, 0.0])), [0.0, 1.0, 0.0])

    def test_conjugate_vector_breaks_near_ties_by_index(self):
        assert_allclose(self.cone.conjugate_vector(np.array([1e-12, 0.0, 1.0])), [1.0, 0.0, 0.0])
        assert_allclose(self.cone.conjugate_vector(np.array([2.0, 1e-10, -1e-10])), [0.0, 1.0, 0.0])

    def test_conjugate_vector_off_boundary(self):
        with self.assertRaises(ValueError):
            self.cone.conjugate_vector(np.array([1.0, 2.0, 3.0]))

    def test_boundary_conjugate(self):
        lam, conjugate = self.cone.boundary_conjugate(np.array([-1.0, 2.0, 0.5]))
        self.assertEqual(lam, -1.0)
        assert_allclose(conjugate, [1.0, 0.0, 0.0])
        lam, conjugate = self.cone.boundary_conjugate(np.array([1.0, 2.0, 0.5]))
        self.assertEqual(lam, 0.5)
        self.assertIsNone(conjugate)

    def test_closed_form_project(self):
        self.assertTrue(self.cone.has_closed_form_project)
        assert_allclose(self.cone.closed_form_project(np.array([-1.0, 2.0, 0.0])), [0.0, 2.0, 0.0])

    def test_self_dual(self):
        self.assertEqual(self.cone.dual_lambda_min(np.array([0.5, 1.0, 2.0])), 0.5)

    def test_contains(self):
        self.assertTrue(self.cone.contains(np.array([0.0, 1.0, 2.0])))
        self.assertFalse(self.cone.contains(np.array([-1e-3, 1.0, 2.0])))
        self.assertTrue(self.cone.contains(np.array([-1e-9, 1.0, 2.0]), tol=1e-8))

    def test_dimension(self):
        with self.assertRaises(ValueError):
            self.cone.lambda_min(np.ones(4))
        with self.assertRaises(ValueError):
            OrthantCone(0)

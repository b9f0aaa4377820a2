"""Tests for the hyperbolic eigenvalues."""
import unittest

import numpy as np
from numpy.testing import assert_allclose

from hypercone.errors import HyperbolicityError
from hypercone.polyform.elesym import EleSym
from hypercone.polyform.linear_factors import LinearFactors
from hypercone.polyform.monomial import Monomial
from hypercone.polyform.sparse import Sparse
from hypercone.spectra.eigen import (count_zero, eigenvalues, lambda_min, min_multiplicity,
                                     multiplicity_zero)
from hypercone.spectra.hyperbolic_form import HyperbolicForm
from hypercone.spectra.tolerances import SpectraTolerances

FACTORS = [[1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [2.0, -1.0, -1.0], [1.0, 2.0, -1.0]]


class TestEigen(unittest.TestCase):

    def setUp(self):
        self.hp = HyperbolicForm(LinearFactors(FACTORS), np.array([0.0, 0.0, 1.0]))
        self.orthant = HyperbolicForm(EleSym(5, 5), np.ones(5))

    def test_linear_factors_fixture(self):
        assert_allclose(
            eigenvalues(self.hp, np.array([3.0, 1.0, 0.0])).values, [4.0, 2.0, -5.0, -5.0], atol=1e-9
        )
        assert_allclose(
            eigenvalues(self.hp, np.array([2.0, 1.0, 0.0])).values, [3.0, 1.0, -3.0, -4.0], atol=1e-9
        )
        assert_allclose(
            eigenvalues(self.hp, np.array([1.0, 1.0, 0.0])).values, [2.0, 0.0, -1.0, -3.0], atol=1e-9
        )

    def test_orthant_eigenvalues_are_sorted_coordinates(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            x = rng.standard_normal(5)
            assert_allclose(eigenvalues(self.orthant, x).values, np.sort(x)[::-1], atol=1e-9)

    def test_scaling_guard(self):
        x = np.array([3.0, -1.0, 2.0, 0.5, -4.0]) * 1e6
        spectrum = eigenvalues(self.orthant, x)
        self.assertGreater(spectrum.scale_used, 1.0)
        assert_allclose(spectrum.values, np.sort(x)[::-1], rtol=1e-9)

    def test_clustered_coordinates(self):
        hp = HyperbolicForm(EleSym(10, 10), np.ones(10))
        rng = np.random.default_rng(13)
        for _ in range(20):
            x = np.concatenate([-0.5 + 0.03 * rng.uniform(-1.0, 1.0, 8), rng.uniform(1.0, 2.0, 2)])
            x[1] = x[0]
            x[2] = x[0] + 1e-6
            rng.shuffle(x)
            assert_allclose(eigenvalues(hp, x).values, np.sort(x)[::-1], atol=1e-8)
            self.assertAlmostEqual(lambda_min(hp, x), float(np.min(x)), delta=1e-8)

    def test_near_double_eigenvalue_is_resolved(self):
        x = np.array([0.3, 0.3 + 1e-9, -0.2, 0.7])
        values = eigenvalues(HyperbolicForm(EleSym(4, 4), np.ones(4)), x).values
        assert_allclose(values, np.sort(x)[::-1], atol=1e-12)
        self.assertEqual(min_multiplicity(values), 1)

    def test_min_multiplicity(self):
        values = eigenvalues(self.orthant, np.array([0.25, 2.0, 0.25, 1.0, 0.25])).values
        self.assertEqual(min_multiplicity(values), 3)
        self.assertEqual(min_multiplicity(np.array([2.0, 1.0, 1e-6, 0.0])), 1)

    def test_no_scaling_inside_unit_ball(self):
        self.assertEqual(eigenvalues(self.orthant, np.full(5, 0.1)).scale_used, 1.0)

    def test_lambda_min(self):
        self.assertAlmostEqual(lambda_min(self.hp, np.array([3.0, 1.0, 0.0])), -5.0)
        self.assertAlmostEqual(lambda_min(self.orthant, np.array([1.0, 2.0, 3.0, 4.0, 5.0])), 1.0)

    def test_eigenvalue_shift(self):
        x = np.array([2.0, 1.0, 0.0])
        shifted = eigenvalues(self.hp, x + 1.5 * self.hp.e).values
        assert_allclose(shifted, eigenvalues(self.hp, x).values + 1.5, atol=1e-9)

    def test_multiplicity_zero(self):
        self.assertEqual(multiplicity_zero(self.hp, np.array([1.0, 1.0, 0.0])), 1)
        self.assertEqual(
            multiplicity_zero(self.orthant, np.array([0.0, 0.0, 1.0, 2.0, 3.0])), 2
        )
        self.assertEqual(multiplicity_zero(self.hp, np.array([3.0, 1.0, 0.0])), 0)

    def test_count_zero_is_relative(self):
        values = np.array([1e4, 5e-3, -2.0])
        self.assertEqual(count_zero(values, SpectraTolerances(zero_mult_tol=1e-7)), 0)
        self.assertEqual(count_zero(values, SpectraTolerances(zero_mult_tol=1e-6)), 1)

    def test_not_hyperbolic(self):
        poly = Sparse(2, [Monomial((2, 0), 1.0), Monomial((0, 2), 1.0)])
        hp = HyperbolicForm(poly, np.array([1.0, 0.0]))
        with self.assertRaises(HyperbolicityError):
            eigenvalues(hp, np.array([0.0, 1.0]))


class TestHyperbolicForm(unittest.TestCase):

    def test_zero_at_direction(self):
        with self.assertRaises(ValueError):
            HyperbolicForm(Sparse(2, [Monomial((1, 1), 1.0)]), np.array([1.0, 0.0]))

    def test_direction_read_only(self):
        hp = HyperbolicForm(EleSym(3, 3), np.ones(3))
        self.assertEqual(hp.pe, 1.0)
        self.assertEqual(hp.d, 3)
        with self.assertRaises(ValueError):
            hp.e[0] = 2.0


class TestSpectraTolerances(unittest.TestCase):

    def test_range(self):
        with self.assertRaises(ValueError):
            SpectraTolerances(zero_mult_tol=0.0)
        with self.assertRaises(ValueError):
            SpectraTolerances(imag_tol=0.1)

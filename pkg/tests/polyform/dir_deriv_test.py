"""Tests for the directional derivative coefficients."""
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose

from hypercone.polyform.dir_deriv import dir_deriv_coeffs, grad_dir_deriv
from hypercone.polyform.elesym import EleSym
from hypercone.polyform.linear_factors import LinearFactors
from hypercone.polyform.monomial import Monomial
from hypercone.polyform.sparse import Sparse


class TestDirDeriv(unittest.TestCase):

    def setUp(self):
        self.cubic = Sparse(3, [Monomial((1, 1, 1), 1.0)])
        self.e = np.ones(3)
        self.rng = np.random.default_rng(3)

    def test_first_derivative_of_cubic(self):
        first = self.cubic.directional_derivative(self.e)
        second = first.directional_derivative(self.e)
        for _ in range(50):
            x = self.rng.standard_normal(3)
            values = dir_deriv_coeffs(self.cubic, self.e, x).values
            assert_allclose(values[0], self.cubic.evaluate(x), rtol=1e-10, atol=1e-12)
            assert_allclose(values[1], first.evaluate(x), rtol=1e-10, atol=1e-12)
            assert_allclose(values[2], second.evaluate(x) / 2.0, rtol=1e-10, atol=1e-12)
            self.assertEqual(values[3], 1.0)

    def test_grad_matches_finite_differences(self):
        h = 1e-6
        for i in range(1, 3):
            for _ in range(10):
                x = self.rng.standard_normal(3)

                def derivative(point, order=i):
                    values = dir_deriv_coeffs(self.cubic, self.e, point).values
                    return math.factorial(order) * values[order]

                expected = [
                    (derivative(x + h * unit) - derivative(x - h * unit)) / (2 * h)
                    for unit in np.eye(3)
                ]
                assert_allclose(
                    grad_dir_deriv(self.cubic, self.e, x, i), expected, rtol=1e-5, atol=1e-7
                )

    def test_grad_of_order_zero(self):
        x = np.array([1.0, 2.0, 3.0])
        assert_allclose(grad_dir_deriv(self.cubic, self.e, x, 0), [6.0, 3.0, 2.0])

    def test_grad_matches_symbolic_derivative(self):
        poly = EleSym(6, 4)
        e = np.array([1.0, 2.0, 0.5, 1.0, 1.5, 1.0])
        symbolic = poly.to_sparse().directional_derivative(e)
        x = self.rng.standard_normal(6)
        assert_allclose(grad_dir_deriv(poly, e, x, 1), symbolic.gradient(x), rtol=1e-9, atol=1e-10)

    def test_linear_factors_restriction(self):
        poly = LinearFactors(
            [[1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [2.0, -1.0, -1.0], [1.0, 2.0, -1.0]]
        )
        values = dir_deriv_coeffs(poly, np.array([0.0, 0.0, 1.0]), np.array([3.0, 1.0, 0.0])).values
        # (4 + t)(2 + t)(5 - t)(5 - t)
        expected = np.polynomial.polynomial.polyfromroots([-4.0, -2.0, 5.0, 5.0])
        assert_allclose(values, expected, atol=1e-9)

    def test_order_out_of_range(self):
        with self.assertRaises(ValueError):
            grad_dir_deriv(self.cubic, self.e, np.ones(3), 3)

    def test_zero_at_direction(self):
        poly = Sparse(2, [Monomial((1, 1), 1.0)])
        with self.assertRaises(ValueError):
            dir_deriv_coeffs(poly, np.array([1.0, 0.0]), np.ones(2))

    def test_complex_point(self):
        with self.assertRaises(ValueError):
            dir_deriv_coeffs(self.cubic, self.e, np.array([1.0j, 0.0, 0.0]))

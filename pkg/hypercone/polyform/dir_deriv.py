"""Directional derivatives along a fixed direction via roots of unity."""

import math
from typing import NamedTuple

import numpy as np

from ..errors import NumericalError
from .polynomial_form import PolynomialForm

IMAG_REL_TOL = 1e-8
_ROUNDOFF_FLOOR = 64.0 * np.finfo(np.float64).eps


class DirDerivCoeffs(NamedTuple):
    """Coefficients of t -> p(x + te); entry i is p^(i)(x) / i!."""

    values: np.ndarray


def _unit_roots(d: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(d) / d)


def _check_inputs(
    poly: PolynomialForm, e: np.ndarray, x: np.ndarray
) -> tuple[np.ndarray, np.ndarray, float]:
    e = poly.check_point(e)
    x = poly.check_point(x)
    if np.iscomplexobj(e) or np.iscomplexobj(x):
        raise ValueError("Directional derivatives take real points")
    pe = float(np.real(poly.evaluate(e)))
    if pe == 0.0:
        raise ValueError("p(e) must be nonzero")
    return e, x, pe


def _realify(
    values: np.ndarray, magnitude: float | np.ndarray, what: str
) -> np.ndarray:
    tolerance = IMAG_REL_TOL * np.maximum(1.0, np.abs(values.real))
    tolerance += _ROUNDOFF_FLOOR * magnitude
    residue = np.abs(values.imag)
    if np.any(residue > tolerance):
        worst = int(np.argmax(residue - tolerance))
        raise NumericalError(
            f"Imaginary residue {residue[worst]:.3e} in {what} exceeds tolerance "
            f"{tolerance[worst]:.3e}"
        )
    return values.real.copy()


def dir_deriv_coeffs(
    poly: PolynomialForm, e: np.ndarray, x: np.ndarray
) -> DirDerivCoeffs:
    """Compute the coefficients of t -> p(x + te).

    The interior coefficients come from the discrete Fourier transform of
    the samples p(x + w^j e) over the d-th roots of unity w^j. The end
    coefficients are p(x) and p(e) exactly.
    """
    e, x, pe = _check_inputs(poly, e, x)
    d = poly.d
    values = np.zeros(d + 1)
    values[0] = float(np.real(poly.evaluate(x)))
    values[d] = pe
    if d >= 2:
        samples = np.array([poly.evaluate(x + w * e) for w in _unit_roots(d)])
        spectrum = np.fft.fft(samples) / d
        values[1:d] = _realify(
            spectrum[1:d], float(np.mean(np.abs(samples))), "restriction coefficients"
        )
    return DirDerivCoeffs(values)


def grad_dir_deriv(
    poly: PolynomialForm, e: np.ndarray, x: np.ndarray, i: int
) -> np.ndarray:
    """Compute the gradient of p^(i), the i-th derivative of p along e, at x."""
    e, x, _ = _check_inputs(poly, e, x)
    d = poly.d
    if not 0 <= i <= d - 1:
        raise ValueError(f"Derivative order {i} is out of range for degree {d}")
    if i == 0:
        return np.real(poly.gradient(x)).astype(np.float64)
    roots = _unit_roots(d)
    gradients = np.array([poly.gradient(x + w * e) for w in roots])
    scale = math.factorial(i) / d
    combined = scale * (roots ** (-i)) @ gradients
    magnitude = scale * np.sum(np.abs(gradients), axis=0)
    return _realify(combined, magnitude, f"gradient of derivative {i}")

"""Closed-form distance and projection for isometric hyperbolicity cones.

Both formulas hold in the norm that the polynomial induces, which is the
Euclidean one for the orthant. The caller asserts isometry; nothing here
verifies it.
"""

import numpy as np

from ..spectra import DEFAULT_TOLERANCES, HyperbolicForm, SpectraTolerances, eigenvalues

_DISTINCT_GAP = 1e-8


def isometric_dist(
    hp: HyperbolicForm, x: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES
) -> float:
    """sqrt(sum_i min(lambda_i(x), 0)^2)."""
    values = eigenvalues(hp, x, tol).values
    return float(np.sqrt(np.sum(np.minimum(values, 0.0) ** 2)))


def isometric_project(
    hp: HyperbolicForm, x: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES
) -> np.ndarray:
    """Project x by zeroing its negative eigenvalues.

    Uses sum_i max(lambda_i, 0) grad p(x - lambda_i e) / p^(1)(x - lambda_i e),
    which needs every eigenvalue of x to be simple.
    """
    x = hp.poly.check_point(x)
    values = eigenvalues(hp, x, tol).values
    if values[-1] >= 0.0:
        return x.copy()
    if values[0] <= 0.0:
        return np.zeros_like(x)
    spread = float(values[0] - values[-1])
    if np.min(-np.diff(values)) <= _DISTINCT_GAP * spread:
        raise ValueError("Isometric projection needs pairwise distinct eigenvalues")
    projection = np.zeros_like(x)
    for value in values[values > 0.0]:
        gradient = np.real(hp.poly.gradient(x - value * hp.e))
        projection += value * gradient / float(np.dot(gradient, hp.e))
    return projection

"""Hyperbolic eigenvalues from the restriction t -> p(x + te)."""

from typing import NamedTuple

import numpy as np

from ..polyform import dir_deriv_coeffs
from .hyperbolic_form import HyperbolicForm
from .refine import COINCIDENCE_TOL, refine_roots
from .roots import check_real, root_clusters
from .tolerances import SpectraTolerances

DEFAULT_TOLERANCES = SpectraTolerances()
# Relative distance within which eigenvalues share the smallest one's multiplicity.
_MIN_MULTIPLICITY_TOL = 10.0 * COINCIDENCE_TOL


class EigenSpectrum(NamedTuple):
    """Eigenvalues sorted from largest to smallest."""

    values: np.ndarray
    scale_used: float


def eigenvalues(
    hp: HyperbolicForm, x: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES
) -> EigenSpectrum:
    """The d roots of t -> p(x - te), sorted descending.

    Companion roots locate the eigenvalues; clusters among them are then
    resolved by resampling the polynomial around each one.
    """
    x = hp.poly.check_point(x)
    norm = float(np.linalg.norm(x))
    scale = norm if norm > 1.0 else 1.0
    scaled = x / scale
    coeffs = dir_deriv_coeffs(hp.poly, hp.e, scaled)
    clusters = root_clusters(coeffs.values)
    check_real(clusters, tol.imag_tol, coeffs.values)
    roots = refine_roots(hp, scaled, clusters)
    return EigenSpectrum(np.sort(-roots)[::-1] * scale, scale)


def min_multiplicity(values: np.ndarray) -> int:
    """How many refined eigenvalues coincide with the smallest one."""
    extent = max(1.0, abs(float(values[0])), abs(float(values[-1])))
    return int(np.sum(values - values[-1] <= _MIN_MULTIPLICITY_TOL * extent))


def lambda_min(
    hp: HyperbolicForm, x: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES
) -> float:
    """The smallest eigenvalue; x lies in the cone iff it is nonnegative."""
    return float(eigenvalues(hp, x, tol).values[-1])


def count_zero(values: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES) -> int:
    """Count the eigenvalues that are zero relative to the spectrum's extent."""
    if values.shape[0] == 0:
        return 0
    extent = max(1.0, abs(float(values[0])), abs(float(values[-1])))
    return int(np.sum(np.abs(values) <= tol.zero_mult_tol * extent))


def multiplicity_zero(
    hp: HyperbolicForm, x: np.ndarray, tol: SpectraTolerances = DEFAULT_TOLERANCES
) -> int:
    """The multiplicity of zero as a root of t -> p(x - te)."""
    return count_zero(eigenvalues(hp, x, tol).values, tol)

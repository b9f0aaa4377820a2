"""Univariate root finding through balanced companion matrices."""

from typing import NamedTuple

import numpy as np
from scipy import linalg, special  # type: ignore

from ..errors import HyperbolicityError, NumericalError

# Relative size of the coefficient noise a root cluster is resolved against.
_COEFFICIENT_NOISE = 1e-14
_RESOLUTION_FACTOR = 2.0


class RootCluster(NamedTuple):
    """Companion roots that the coefficients cannot tell apart.

    Clusters are closed under conjugation, so their centre is real up to
    roundoff. radius is the resolution radius at the centre.
    """

    roots: np.ndarray
    radius: float

    @property
    def size(self) -> int:
        """The number of roots in the cluster."""
        return self.roots.shape[0]

    @property
    def center(self) -> complex:
        """The mean of the roots."""
        return complex(np.mean(self.roots))

    @property
    def spread(self) -> float:
        """The largest distance of a root from the centre."""
        return float(np.max(np.abs(self.roots - self.center)))

    @property
    def resolved(self) -> bool:
        """Whether the roots sit within the resolution radius of their centre."""
        return self.spread <= self.radius


def poly_roots(coeffs: np.ndarray) -> np.ndarray:
    """All roots of sum_i coeffs[i] t^i, in no particular order.

    Coefficients are in ascending order of degree.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.ndim != 1 or coeffs.shape[0] < 1:
        raise ValueError("Coefficients must be a non-empty vector")
    if not np.all(np.isfinite(coeffs)):
        raise NumericalError(f"Non-finite coefficients: {coeffs.tolist()}")
    if coeffs[-1] == 0.0:
        raise ValueError("The leading coefficient must be nonzero")
    degree = coeffs.shape[0] - 1
    if degree == 0:
        return np.zeros(0, dtype=np.complex128)
    coeffs = coeffs / np.max(np.abs(coeffs))
    companion = np.zeros((degree, degree))
    companion[1:, :-1] = np.eye(degree - 1)
    companion[:, -1] = -coeffs[:-1] / coeffs[-1]
    balanced, _ = linalg.matrix_balance(companion, permute=False)
    return linalg.eigvals(balanced)


def _taylor_coefficient(monic: np.ndarray, center: complex, order: int) -> complex:
    """Coefficient of delta^order in q(center + delta)."""
    powers = np.arange(order, monic.shape[0])
    return complex(
        np.sum(monic[order:] * special.comb(powers, order) * center ** (powers - order))
    )


def _resolution_radius(monic: np.ndarray, center: complex, order: int) -> float:
    """Radius below which an order-fold root cannot be told apart from noise."""
    reach = max(1.0, abs(center))
    noise = _COEFFICIENT_NOISE * float(
        np.sum(np.abs(monic) * reach ** np.arange(monic.shape[0]))
    )
    slope = abs(_taylor_coefficient(monic, center, order))
    if slope == 0.0:
        return np.inf
    return _RESOLUTION_FACTOR * (noise / slope) ** (1.0 / order)


def _conjugate_units(roots: np.ndarray) -> list[np.ndarray]:
    real = [np.array([root]) for root in roots[roots.imag == 0.0]]
    pairs = [np.array([root, np.conj(root)]) for root in roots[roots.imag > 0.0]]
    return sorted(real + pairs, key=lambda unit: float(unit[0].real))


def _cluster(monic: np.ndarray, roots: np.ndarray) -> RootCluster:
    center = complex(np.mean(roots))
    return RootCluster(roots, _resolution_radius(monic, center, roots.shape[0]))


def root_clusters(coeffs: np.ndarray, within: float = np.inf) -> list[RootCluster]:
    """Group the roots of a real polynomial into unresolvable clusters.

    Real roots and conjugate pairs are merged with a neighbour while the
    merged spread stays within the resolution radius of the merged centre.
    Roots of modulus above within are dropped first. Clusters are ordered
    by the real part of their centre.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    roots = poly_roots(coeffs)
    if not np.all(np.isfinite(roots)):
        raise NumericalError(f"Root finding failed for {coeffs.tolist()}")
    monic = coeffs / coeffs[-1]
    units = _conjugate_units(roots[np.abs(roots) <= within])
    clusters = [_cluster(monic, unit) for unit in units]
    merged = True
    while merged and len(clusters) > 1:
        merged = False
        for idx in range(len(clusters) - 1):
            candidate = _cluster(
                monic, np.concatenate([clusters[idx].roots, clusters[idx + 1].roots])
            )
            if candidate.resolved:
                clusters[idx : idx + 2] = [candidate]
                merged = True
                break
    return clusters


def check_real(clusters: list[RootCluster], imag_tol: float, coeffs: np.ndarray) -> None:
    """Reject conjugate pairs the coefficients resolve as truly complex."""
    for cluster in clusters:
        if cluster.resolved:
            continue
        root = cluster.roots[0]
        if abs(root.imag) > imag_tol * (1.0 + abs(root.real)):
            raise HyperbolicityError(
                f"Root {root} is not real within tolerance {imag_tol}", coeffs
            )


def real_roots(coeffs: np.ndarray, imag_tol: float) -> np.ndarray:
    """The real roots of a real-rooted polynomial, with multiplicity.

    Each cluster is replaced by its mean, which is the best estimate the
    coefficients alone give. Eigenvalue computations refine clusters
    further by resampling the polynomial.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    clusters = root_clusters(coeffs)
    check_real(clusters, imag_tol, coeffs)
    values: list[float] = []
    for cluster in clusters:
        values.extend([cluster.center.real] * cluster.size)
    return np.array(values)

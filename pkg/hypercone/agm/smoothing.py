"""The smoothed maximum eigenvalue and its gradient."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import special  # type: ignore

from ..errors import NumericalError
from ..polyform import grad_dir_deriv
from ..spectra import DEFAULT_TOLERANCES, HyperbolicForm, SpectraTolerances, eigenvalues

_WIDEN_FACTOR = 100.0
_ZERO_DENOMINATOR = 1e-12


@dataclass(frozen=True)
class SmoothingConfig:
    """The smoothing parameter mu and the tolerance for grouping eigenvalues."""

    mu: float
    cluster_tol: float = 1e-6

    def __post_init__(self) -> None:
        if not self.mu > 0.0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if not 0.0 < self.cluster_tol <= 1e-2:
            raise ValueError(f"cluster_tol must lie in (0, 1e-2], got {self.cluster_tol}")


class SmoothedTerms(NamedTuple):
    """Distinct eigenvalues, their multiplicities and gradient terms."""

    values: np.ndarray
    multiplicities: np.ndarray
    terms: np.ndarray


def cluster_eigenvalues(
    values: np.ndarray, cluster_tol: float
) -> tuple[np.ndarray, np.ndarray]:
    """Group sorted eigenvalues into distinct values and multiplicities."""
    spread = float(values[0] - values[-1])
    link = cluster_tol * max(1.0, spread)
    groups: list[list[float]] = [[float(values[0])]]
    for value in values[1:]:
        if groups[-1][-1] - value <= link:
            groups[-1].append(float(value))
        else:
            groups.append([float(value)])
    return np.array([np.mean(x) for x in groups]), np.array([len(x) for x in groups])


def _terms(
    hp: HyperbolicForm, x: np.ndarray, values: np.ndarray, cluster_tol: float
) -> SmoothedTerms | None:
    distinct, multiplicities = cluster_eigenvalues(values, cluster_tol)
    terms = np.empty((distinct.shape[0], hp.n))
    for j, (value, multiplicity) in enumerate(zip(distinct, multiplicities)):
        gradient = grad_dir_deriv(hp.poly, hp.e, x - value * hp.e, int(multiplicity) - 1)
        # <grad p^(m-1), e> is p^(m).
        denominator = float(np.dot(gradient, hp.e))
        if abs(denominator) <= _ZERO_DENOMINATOR * np.linalg.norm(gradient) * np.linalg.norm(
            hp.e
        ):
            return None
        terms[j] = gradient / denominator
    return SmoothedTerms(distinct, multiplicities, terms)


def smoothed_terms(
    hp: HyperbolicForm,
    x: np.ndarray,
    cfg: SmoothingConfig,
    tol: SpectraTolerances = DEFAULT_TOLERANCES,
) -> SmoothedTerms:
    """The per-cluster terms grad p^(m_j - 1)(x - lambda_j e) / p^(m_j)(x - lambda_j e)."""
    x = hp.poly.check_point(x)
    values = eigenvalues(hp, x, tol).values
    terms = _terms(hp, x, values, cfg.cluster_tol)
    if terms is None:
        widened = min(cfg.cluster_tol * _WIDEN_FACTOR, 1e-2)
        logging.warning(
            "Vanishing derivative at a cluster; widening cluster_tol to %g", widened
        )
        terms = _terms(hp, x, values, widened)
    if terms is None:
        raise NumericalError("Eigenvalue multiplicities could not be resolved")
    return terms


def smoothed_weights(terms: SmoothedTerms, mu: float, shift: bool = True) -> np.ndarray:
    """Normalised weights m_j exp((lambda_j - lambda_max) / mu)."""
    offset = float(terms.values[0]) if shift else 0.0
    weights = terms.multiplicities * np.exp((terms.values - offset) / mu)
    return weights / np.sum(weights)


def smoothed_grad(
    hp: HyperbolicForm,
    x: np.ndarray,
    cfg: SmoothingConfig,
    tol: SpectraTolerances = DEFAULT_TOLERANCES,
    shift: bool = True,
) -> np.ndarray:
    """The gradient of mu log sum_j m_j exp(lambda_j(x) / mu)."""
    terms = smoothed_terms(hp, x, cfg, tol)
    return smoothed_weights(terms, cfg.mu, shift) @ terms.terms


def smoothed_max_eig(
    hp: HyperbolicForm,
    x: np.ndarray,
    mu: float,
    tol: SpectraTolerances = DEFAULT_TOLERANCES,
) -> float:
    """mu log sum_i exp(lambda_i(x) / mu), an upper bound on lambda_max(x)."""
    values = eigenvalues(hp, x, tol).values
    return mu * float(special.logsumexp(values / mu))

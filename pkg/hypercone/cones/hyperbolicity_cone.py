"""Hyperbolicity cones and the derivative relaxations of the orthant."""

import logging
import math
from typing import NamedTuple

import numpy as np

from ..errors import NumericalError
from ..polyform import EleSym, grad_dir_deriv
from ..spectra import (DEFAULT_TOLERANCES, EigenSpectrum, HyperbolicForm,
                       SpectraTolerances, count_zero, eigenvalues,
                       min_multiplicity)
from .cone_oracle import ConeOracle, boundary_tolerance, unit
from .isometric import isometric_project

# Relative size below which a conjugate vector counts as zero.
_ZERO_VECTOR_TOL = 1e-10
# Relative size of <g, z> above which g is not orthogonal to the boundary point z.
_COMPLEMENTARITY_TOL = 1e-8


class ConjugateVector(NamedTuple):
    """A conjugate vector grad p^(r-1)(z) with the multiplicity r used."""

    vector: np.ndarray
    multiplicity: int
    clamped: bool


def _zero_threshold(hp: HyperbolicForm, r: int, norm_z: float) -> float:
    norm_e = float(np.linalg.norm(hp.e))
    reference = math.factorial(hp.d) / math.factorial(hp.d - r) * abs(hp.pe) / norm_e
    return _ZERO_VECTOR_TOL * reference * (norm_z / norm_e) ** (hp.d - r)


def _conjugate_direction(
    hp: HyperbolicForm, z: np.ndarray, r: int
) -> tuple[ConjugateVector, float]:
    """The conjugate vector at z scaled into the unit ball, and that scale."""
    clamped = False
    if r == 0:
        logging.warning("Boundary point has no zero eigenvalue; clamping r to 1")
        r = 1
        clamped = True
    norm = float(np.linalg.norm(z))
    scale = norm if norm > 1.0 else 1.0
    scaled = z / scale
    for attempt in range(2):
        vector = math.copysign(1.0, hp.pe) * grad_dir_deriv(
            hp.poly, hp.e, scaled, r - 1
        )
        if np.linalg.norm(vector) > _zero_threshold(hp, r, norm / scale):
            return ConjugateVector(vector, r, clamped), scale
        if attempt > 0 or r >= hp.d:
            break
        logging.warning("Conjugate vector vanished at r=%d; retrying with r=%d", r, r + 1)
        r += 1
    raise NumericalError(f"Conjugate vector is numerically zero at multiplicity {r}")


def _subproblem_conjugate(hp: HyperbolicForm, z: np.ndarray, r: int) -> np.ndarray:
    """grad p^(s-1)(z) for the smallest s >= r that gives a valid conjugate vector.

    Eigenvalues that nearly coincide with the smallest make the gradient at
    the exact multiplicity tiny but still orthogonal to z, so validity is
    judged by alignment with e and orthogonality rather than by size.
    """
    norm = float(np.linalg.norm(z))
    scaled = z / (norm if norm > 1.0 else 1.0)
    sign = math.copysign(1.0, hp.pe)
    for order in range(max(r, 1), hp.d + 1):
        vector = sign * grad_dir_deriv(hp.poly, hp.e, scaled, order - 1)
        size = float(np.linalg.norm(vector))
        if (
            np.isfinite(size)
            and size > 0.0
            and float(np.dot(hp.e, vector)) > 0.0
            and abs(float(np.dot(vector, scaled)))
            <= _COMPLEMENTARITY_TOL * size * float(np.linalg.norm(scaled))
        ):
            if order > r:
                logging.debug("Conjugate vector needed multiplicity %d, not %d", order, r)
            return vector
    raise NumericalError(f"No valid conjugate vector from multiplicity {r} up")


class HyperbolicityCone(ConeOracle):
    """The cone of points whose eigenvalues are all nonnegative."""

    def __init__(
        self,
        hp: HyperbolicForm,
        tolerances: SpectraTolerances = DEFAULT_TOLERANCES,
        isometric: bool = False,
    ) -> None:
        self._hp = hp
        self._tolerances = tolerances
        self._isometric = isometric

    @property
    def hp(self) -> HyperbolicForm:
        """The polynomial and direction defining the cone."""
        return self._hp

    @property
    def tolerances(self) -> SpectraTolerances:
        """The tolerances used for eigenvalue computations."""
        return self._tolerances

    @property
    def isometric(self) -> bool:
        """Whether the caller asserted the polynomial is isometric."""
        return self._isometric

    @property
    def dim(self) -> int:
        return self._hp.n

    @property
    def e(self) -> np.ndarray:
        return self._hp.e

    def eigenvalues(self, x: np.ndarray) -> EigenSpectrum:
        """The eigenvalues of x, largest first."""
        return eigenvalues(self._hp, x, self._tolerances)

    def lambda_min(self, x: np.ndarray) -> float:
        return float(self.eigenvalues(x).values[-1])

    def conjugate_vector(self, z: np.ndarray) -> np.ndarray:
        z = self.check_point(z)
        values = self.eigenvalues(z).values
        if abs(values[-1]) > boundary_tolerance(z):
            raise ValueError(
                f"Point is not on the boundary: lambda_min = {values[-1]:.3e}"
            )
        conjugate, _ = _conjugate_direction(
            self._hp, z, count_zero(values, self._tolerances)
        )
        return unit(conjugate.vector)

    def boundary_conjugate(self, x: np.ndarray) -> tuple[float, np.ndarray | None]:
        x = self.check_point(x)
        values = self.eigenvalues(x).values
        lam = float(values[-1])
        if lam >= 0.0:
            return lam, None
        conjugate = _subproblem_conjugate(
            self._hp, x - lam * self._hp.e, min_multiplicity(values)
        )
        return lam, unit(conjugate)

    @property
    def has_closed_form_project(self) -> bool:
        return self._isometric

    def closed_form_project(self, x: np.ndarray) -> np.ndarray:
        if not self._isometric:
            return super().closed_form_project(x)
        return isometric_project(self._hp, x, self._tolerances)


def hyp_conjugate_vector(cone: HyperbolicityCone, z: np.ndarray) -> ConjugateVector:
    """grad p^(r-1)(z) with r the number of zero eigenvalues of z."""
    z = cone.check_point(z)
    values = cone.eigenvalues(z).values
    if abs(values[-1]) > boundary_tolerance(z):
        raise ValueError(f"Point is not on the boundary: lambda_min = {values[-1]:.3e}")
    conjugate, scale = _conjugate_direction(
        cone.hp, z, count_zero(values, cone.tolerances)
    )
    return conjugate._replace(
        vector=conjugate.vector * scale ** (cone.hp.d - conjugate.multiplicity)
    )


class DerivativeRelaxation(HyperbolicityCone):
    """The k-th derivative relaxation of the nonnegative orthant.

    It is the hyperbolicity cone of sigma_{n,n-k} along the all-ones vector;
    k = 0 is the orthant itself.
    """

    def __init__(
        self, n: int, k: int, tolerances: SpectraTolerances = DEFAULT_TOLERANCES
    ) -> None:
        if not 0 <= k <= n - 1:
            raise ValueError(f"Relaxation order k={k} is out of range for n={n}")
        super().__init__(
            HyperbolicForm(EleSym(n, n - k), np.ones(n)), tolerances, isometric=k == 0
        )
        self._n = n
        self._k = k

    @property
    def n(self) -> int:
        """The number of variables."""
        return self._n

    @property
    def k(self) -> int:
        """The relaxation order."""
        return self._k

    def relax(self) -> "DerivativeRelaxation":
        """The next, larger, relaxation in the chain."""
        return DerivativeRelaxation(self._n, self._k + 1, self.tolerances)

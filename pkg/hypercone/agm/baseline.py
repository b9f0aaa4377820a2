"""A simplified accelerated-gradient baseline for projections."""

# pylint: disable=too-many-locals
import logging
import math
import time
from dataclasses import dataclass

import numpy as np
from scipy import special  # type: ignore

from ..cones import HyperbolicityCone
from ..dfw import SolveStatus, SolveTrace, TraceRecord, compute_cd_projection
from ..errors import NoFeasibleIterateError, NumericalError
from ..spectra import eigenvalues
from .smoothing import SmoothingConfig, cluster_eigenvalues, smoothed_terms

_MAX_BACKTRACKS = 60
_DESCENT_SLACK = 1e-12


@dataclass(frozen=True)
class AGMConfig:
    """Settings for the accelerated baseline.

    The smoothing parameter starts at mu_start and halves down to mu.
    """

    mu: float = 1e-3
    mu_start: float = 1.0
    max_iters: int = 5000
    max_seconds: float = math.inf
    tol: float = 1e-7
    record_trace: bool = True
    cluster_tol: float = 1e-6

    def __post_init__(self) -> None:
        for name in ("mu", "mu_start", "max_seconds", "tol"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if not 0.0 < self.cluster_tol <= 1e-2:
            raise ValueError(f"cluster_tol must lie in (0, 1e-2], got {self.cluster_tol}")


@dataclass(frozen=True)
class AGMResult:
    """The outcome of a baseline run."""

    x: np.ndarray
    trace: SolveTrace
    status: SolveStatus
    iterations: int
    mu: float
    label: str = "simplified"

    @property
    def objective(self) -> float | None:
        """Half the squared distance from x0 to x."""
        best = self.trace.best_feasible
        return None if best is None else best.objective


class _Penalty:
    """F(x) = 0.5 |x - x0|^2 + rho mu log(1 + sum_j m_j exp(-lambda_j(x) / mu))."""

    def __init__(
        self, cone: HyperbolicityCone, x0: np.ndarray, rho: float, cfg: SmoothingConfig
    ) -> None:
        self._cone = cone
        self._x0 = x0
        self._rho = rho
        self._cfg = cfg

    @property
    def mu(self) -> float:
        return self._cfg.mu

    def _exponents(
        self, values: np.ndarray, multiplicities: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        a = np.concatenate(([0.0], -values / self._cfg.mu))
        b = np.concatenate(([1.0], multiplicities.astype(np.float64)))
        return a, b

    def _value(self, x: np.ndarray, values: np.ndarray, multiplicities: np.ndarray) -> float:
        a, b = self._exponents(values, multiplicities)
        smoothed = self._cfg.mu * float(special.logsumexp(a, b=b))
        return 0.5 * float(np.sum((x - self._x0) ** 2)) + self._rho * smoothed

    def value(self, x: np.ndarray) -> float:
        spectrum = eigenvalues(self._cone.hp, x, self._cone.tolerances)
        values, multiplicities = cluster_eigenvalues(spectrum.values, self._cfg.cluster_tol)
        return self._value(x, values, multiplicities)

    def value_and_grad(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        terms = smoothed_terms(self._cone.hp, x, self._cfg, self._cone.tolerances)
        a, b = self._exponents(terms.values, terms.multiplicities)
        weights = b * np.exp(a - np.max(a))
        weights /= np.sum(weights)
        gradient = (x - self._x0) - self._rho * (weights[1:] @ terms.terms)
        return self._value(x, terms.values, terms.multiplicities), gradient


class _Fista:
    """One accelerated sub-method with backtracking and function restart."""

    def __init__(self, penalty: _Penalty, x: np.ndarray, lipschitz: float) -> None:
        self.penalty = penalty
        self.x = x.copy()
        self.lipschitz = lipschitz
        self._y = x.copy()
        self._t = 1.0
        self._value = penalty.value(x)

    def step(self) -> float:
        """Take one step and return the gradient norm at the extrapolated point."""
        value_y, grad_y = self.penalty.value_and_grad(self._y)
        grad_sq = float(np.dot(grad_y, grad_y))
        for _ in range(_MAX_BACKTRACKS):
            candidate = self._y - grad_y / self.lipschitz
            value = self.penalty.value(candidate)
            slack = _DESCENT_SLACK * max(1.0, abs(value_y))
            if value <= value_y - grad_sq / (2.0 * self.lipschitz) + slack:
                break
            self.lipschitz *= 2.0
        else:
            raise NumericalError("Backtracking failed to find a descent step")
        if value > self._value:
            self._t = 1.0
            self._y = self.x.copy()
        else:
            t_next = 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * self._t**2))
            self._y = candidate + ((self._t - 1.0) / t_next) * (candidate - self.x)
            self.x = candidate
            self._value = value
            self._t = t_next
        return math.sqrt(grad_sq)


def _feasible(cone: HyperbolicityCone, x: np.ndarray) -> tuple[np.ndarray, float]:
    lam = cone.lambda_min(x)
    return x - min(0.0, lam) * cone.e, max(0.0, lam)


def agm_baseline(
    cone: HyperbolicityCone, x0: np.ndarray, config: AGMConfig = AGMConfig()
) -> AGMResult:
    """Project x0 onto the cone by smoothing a penalty on the minimum eigenvalue.

    Two accelerated sub-methods run at mu_p and mu_p / 2, one step of each
    per iteration. When the primary's gradient norm drops below mu_p the
    secondary is promoted and a new one starts at half its parameter.
    Every iterate is shifted along e onto the cone before it is recorded.
    """
    x0 = np.asarray(cone.check_point(x0), dtype=np.float64)
    trace = SolveTrace()
    start = time.perf_counter()
    lam0 = cone.lambda_min(x0)
    if lam0 >= 0.0:
        trace.offer(0, x0, 0.0)
        if config.record_trace:
            trace.record(TraceRecord(0, math.nan, 0.0, lam0, 0.0, 0.0))
        return AGMResult(x0.copy(), trace, SolveStatus.CONVERGED, 1, config.mu)

    rho = compute_cd_projection(cone.e, x0)

    def make(mu: float, x: np.ndarray, lipschitz: float) -> _Fista:
        cfg = SmoothingConfig(mu, config.cluster_tol)
        return _Fista(_Penalty(cone, x0, rho, cfg), x, lipschitz)

    primary = make(max(config.mu_start, config.mu), x0, 1.0)
    secondary = None
    if primary.penalty.mu > config.mu:
        secondary = make(max(primary.penalty.mu / 2.0, config.mu), x0, 2.0)

    status = SolveStatus.MAX_ITERS
    iteration = 0
    for iteration in range(config.max_iters):
        norm = primary.step()
        if secondary is not None:
            secondary.step()
        z, lam = _feasible(cone, primary.x)
        objective = 0.5 * float(np.sum((z - x0) ** 2))
        trace.offer(iteration, z, objective)
        if config.record_trace:
            trace.record(
                TraceRecord(
                    iteration,
                    math.nan,
                    objective,
                    lam,
                    1.0 / primary.lipschitz,
                    time.perf_counter() - start,
                )
            )
        logging.debug(
            "iteration %d: mu=%.3e grad=%.3e objective=%.6e",
            iteration,
            primary.penalty.mu,
            norm,
            objective,
        )
        if secondary is None and norm <= config.tol:
            status = SolveStatus.CONVERGED
            break
        if secondary is not None and norm <= primary.penalty.mu:
            primary = secondary
            secondary = None
            if primary.penalty.mu > config.mu:
                secondary = make(
                    max(primary.penalty.mu / 2.0, config.mu),
                    primary.x,
                    2.0 * primary.lipschitz,
                )
        if time.perf_counter() - start > config.max_seconds:
            status = SolveStatus.MAX_SECONDS
            break
    best = trace.best_feasible
    if best is None:
        raise NoFeasibleIterateError("No feasible iterate was recorded")
    return AGMResult(best.x, trace, status, iteration + 1, primary.penalty.mu)

"""The conic program min f(x) s.t. Tx + b in K and its dual."""

# pylint: disable=invalid-name
from __future__ import annotations

import json
from typing import Any

import numpy as np

from ..cones import ConeOracle, cone_from_dict
from .quadratic_objective import QuadraticObjective

_IDENTITY = "identity"


class ConicProgram:
    """A quadratic program over a regular cone.

    The dual is min h(y) = f*(T*y) + <b, y> over y in K*. T = None is the
    identity shortcut.
    """

    def __init__(
        self,
        objective: QuadraticObjective,
        T: np.ndarray | None,
        b: np.ndarray | None,
        cone: ConeOracle,
        x0: np.ndarray | None = None,
    ) -> None:
        m = cone.dim
        if T is None:
            if objective.n != m:
                raise ValueError(f"Identity T needs n = m, got n={objective.n}, m={m}")
            self._T = None
            self._op_norm = 1.0
        else:
            T = np.array(T, dtype=np.float64)
            if T.shape != (m, objective.n):
                raise ValueError(f"T must be {m}x{objective.n}, got {T.shape}")
            T.setflags(write=False)
            self._T = T
            self._op_norm = float(np.linalg.norm(T, 2))
        b = np.zeros(m) if b is None else np.array(b, dtype=np.float64)
        if b.shape != (m,):
            raise ValueError(f"b must have dimension {m}, got {b.shape}")
        b.setflags(write=False)
        self._objective = objective
        self._b = b
        self._cone = cone
        self._x0 = x0

    @classmethod
    def projection(cls, cone: ConeOracle, x0: np.ndarray) -> ConicProgram:
        """The program min 1/2 ||x - x0||^2 s.t. x in K."""
        x0 = cone.check_point(x0).copy()
        x0.setflags(write=False)
        objective = QuadraticObjective(None, -x0, 0.5 * float(np.dot(x0, x0)))
        return cls(objective, None, None, cone, x0)

    @property
    def objective(self) -> QuadraticObjective:
        """The quadratic objective f."""
        return self._objective

    @property
    def T(self) -> np.ndarray | None:
        """The linear map, or None for the identity."""
        return self._T

    @property
    def b(self) -> np.ndarray:
        """The offset inside the cone constraint."""
        return self._b

    @property
    def cone(self) -> ConeOracle:
        """The cone K."""
        return self._cone

    @property
    def x0(self) -> np.ndarray | None:
        """The projected point when this is a projection program."""
        return self._x0

    @property
    def is_projection(self) -> bool:
        """Whether the program is a Euclidean projection onto the cone."""
        return self._x0 is not None

    @property
    def op_norm(self) -> float:
        """The operator norm of T."""
        return self._op_norm

    def apply_T(self, x: np.ndarray) -> np.ndarray:
        """Tx."""
        return x.copy() if self._T is None else self._T @ x

    def apply_T_adjoint(self, y: np.ndarray) -> np.ndarray:
        """T*y."""
        return y.copy() if self._T is None else self._T.T @ y

    def residual(self, x: np.ndarray) -> np.ndarray:
        """Tx + b, which must lie in K."""
        return self.apply_T(x) + self._b

    def primal_point(self, y: np.ndarray) -> np.ndarray:
        """x = grad f*(T*y); also the gradient of h at y maps to Tx + b."""
        return self._objective.conj_grad(self.apply_T_adjoint(y))

    def dual_value(self, y: np.ndarray) -> float:
        """h(y) = f*(T*y) + <b, y>."""
        return self._objective.conj_value(self.apply_T_adjoint(y)) + float(
            np.dot(self._b, y)
        )

    def dual_curvature(self, d: np.ndarray) -> float:
        """<T*d, Q^{-1} T*d>, the curvature of h along d."""
        adjoint = self.apply_T_adjoint(d)
        return float(np.dot(adjoint, self._objective.inverse_apply(adjoint)))

    def primal_lambda_min(self, x: np.ndarray) -> float:
        """lambda_min(Tx + b); x is feasible iff it is nonnegative."""
        return self._cone.lambda_min(self.residual(x))


def _matrix(value: Any, name: str) -> np.ndarray | None:
    if value == _IDENTITY:
        return None
    matrix = np.array(value, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"{name} must be '{_IDENTITY}' or a matrix")
    return matrix


def problem_from_dict(data: dict[str, Any]) -> ConicProgram:
    """Build a conic program from its JSON dictionary."""
    try:
        cone = cone_from_dict(data["cone"])
        objective = QuadraticObjective(
            _matrix(data["objective"].get("Q", _IDENTITY), "Q"),
            np.array(data["objective"]["c"], dtype=np.float64),
        )
        b = data.get("b")
        return ConicProgram(
            objective,
            _matrix(data.get("T", _IDENTITY), "T"),
            None if b is None else np.array(b, dtype=np.float64),
            cone,
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"Malformed problem: {exc}") from exc


def load_problem(path: str) -> ConicProgram:
    """Load a conic program from a JSON file."""
    with open(path, encoding="utf8") as handle:
        return problem_from_dict(json.load(handle))

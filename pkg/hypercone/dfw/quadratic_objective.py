"""The strongly convex quadratic objective and its conjugate."""

# pylint: disable=invalid-name
import numpy as np
from scipy import linalg  # type: ignore

_SYMMETRY_TOL = 1e-12


class QuadraticObjective:
    """f(x) = 1/2 <x, Qx> + <c, x> + offset with Q symmetric positive definite.

    Q = None is the identity shortcut.
    """

    def __init__(
        self, Q: np.ndarray | None, c: np.ndarray, offset: float = 0.0
    ) -> None:
        c = np.array(c, dtype=np.float64)
        if c.ndim != 1:
            raise ValueError(f"c must be a vector, got shape {c.shape}")
        n = c.shape[0]
        self._factor = None
        if Q is None:
            self._Q = None
            self._eigen_range = (1.0, 1.0)
        else:
            Q = np.array(Q, dtype=np.float64)
            if Q.shape != (n, n):
                raise ValueError(f"Q must be {n}x{n}, got {Q.shape}")
            if np.max(np.abs(Q - Q.T)) > _SYMMETRY_TOL * max(1.0, np.max(np.abs(Q))):
                raise ValueError("Q must be symmetric")
            spectrum = linalg.eigvalsh(Q)
            if spectrum[0] <= 0.0:
                raise ValueError(f"Q must be positive definite, smallest eigenvalue {spectrum[0]}")
            self._factor = linalg.cho_factor(Q)
            self._eigen_range = (float(spectrum[0]), float(spectrum[-1]))
            Q.setflags(write=False)
            self._Q = Q
        c.setflags(write=False)
        self._c = c
        self._offset = float(offset)

    @property
    def n(self) -> int:
        """The dimension of x."""
        return self._c.shape[0]

    @property
    def Q(self) -> np.ndarray | None:
        """The Hessian, or None for the identity."""
        return self._Q

    @property
    def c(self) -> np.ndarray:
        """The linear term."""
        return self._c

    @property
    def offset(self) -> float:
        """The constant term."""
        return self._offset

    @property
    def mu(self) -> float:
        """The strong convexity modulus, the smallest eigenvalue of Q."""
        return self._eigen_range[0]

    @property
    def lambda_max(self) -> float:
        """The largest eigenvalue of Q."""
        return self._eigen_range[1]

    def hessian_apply(self, x: np.ndarray) -> np.ndarray:
        """Qx."""
        return x.copy() if self._Q is None else self._Q @ x

    def inverse_apply(self, s: np.ndarray) -> np.ndarray:
        """Q^{-1} s."""
        return s.copy() if self._factor is None else linalg.cho_solve(self._factor, s)

    def value(self, x: np.ndarray) -> float:
        """f(x)."""
        return self.quadratic_value(x) + self._offset

    def quadratic_value(self, x: np.ndarray) -> float:
        """f(x) without the constant term."""
        return float(0.5 * np.dot(x, self.hessian_apply(x)) + np.dot(self._c, x))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        """Qx + c."""
        return self.hessian_apply(x) + self._c

    def conj_value(self, s: np.ndarray) -> float:
        """f*(s) = 1/2 <s - c, Q^{-1}(s - c)> - offset."""
        shifted = s - self._c
        return float(0.5 * np.dot(shifted, self.inverse_apply(shifted))) - self._offset

    def conj_grad(self, s: np.ndarray) -> np.ndarray:
        """grad f*(s) = Q^{-1}(s - c), the primal point recovered from s."""
        return self.inverse_apply(s - self._c)

    def inverse_quad(self) -> float:
        """<c, Q^{-1} c>."""
        return float(np.dot(self._c, self.inverse_apply(self._c)))

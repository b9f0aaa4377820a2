"""The implicit elementary symmetric polynomial form."""

# pylint: disable=invalid-name
from __future__ import annotations

import numpy as np

from .polynomial_form import PolynomialForm
from .sparse import Sparse


def _check_range(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} is out of range for n={n}")


def _check_vector(n: int, x: np.ndarray) -> np.ndarray:
    arr = np.asarray(x)
    if not np.iscomplexobj(arr):
        arr = arr.astype(np.float64)
    if arr.shape != (n,):
        raise ValueError(f"Expected a point of dimension {n}, got shape {arr.shape}")
    return arr


def elesym_coeffs(x: np.ndarray, k: int) -> np.ndarray:
    """Coefficients of prod_i (1 + x_i t) up to t^k.

    Entry j is sigma_j(x); this is the coefficient list of prod_i (t + x_i)
    read from the top. Factors are multiplied as a balanced tree.
    """
    if x.shape[0] == 1:
        leaf = np.zeros(min(k, 1) + 1, dtype=x.dtype)
        leaf[0] = 1.0
        if k >= 1:
            leaf[1] = x[0]
        return leaf
    mid = x.shape[0] // 2
    left = elesym_coeffs(x[:mid], k)
    right = elesym_coeffs(x[mid:], k)
    return np.convolve(left, right)[: k + 1]


def elesym_eval(n: int, k: int, x: np.ndarray) -> complex:
    """Evaluate sigma_{n,k}(x)."""
    _check_range(n, k)
    x = _check_vector(n, x)
    return elesym_coeffs(x, k)[k]


def elesym_grad(n: int, k: int, x: np.ndarray) -> np.ndarray:
    """Gradient of sigma_{n,k}; entry i is sigma_{n-1,k-1} of x without x_i."""
    _check_range(n, k)
    x = _check_vector(n, x)
    prefix = np.zeros((n + 1, k), dtype=x.dtype)
    suffix = np.zeros((n + 1, k), dtype=x.dtype)
    prefix[0, 0] = 1.0
    suffix[n, 0] = 1.0
    for i in range(n):
        prefix[i + 1] = prefix[i]
        prefix[i + 1, 1:] += x[i] * prefix[i, :-1]
    for i in reversed(range(n)):
        suffix[i] = suffix[i + 1]
        suffix[i, 1:] += x[i] * suffix[i + 1, :-1]
    return np.einsum("ia,ia->i", prefix[:-1], suffix[1:, ::-1])


class EleSym(PolynomialForm):
    """The k-th elementary symmetric polynomial in n variables."""

    def __init__(self, n: int, k: int) -> None:
        _check_range(n, k)
        self._n = n
        self._k = k

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return self._k

    @property
    def k(self) -> int:
        """The order of the elementary symmetric polynomial."""
        return self._k

    def evaluate(self, x: np.ndarray) -> complex:
        return elesym_eval(self._n, self._k, x)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        return elesym_grad(self._n, self._k, x)

    def to_sparse(self) -> Sparse:
        return Sparse.elesym(self._n, self._k)

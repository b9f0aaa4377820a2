"""The polynomial form interface."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .sparse import Sparse


class PolynomialForm(ABC):
    """A homogeneous polynomial in n variables of degree d.

    Evaluation accepts real or complex points; complex points are needed
    to sample the polynomial on roots of unity.
    """

    @property
    @abstractmethod
    def n(self) -> int:
        """The number of variables."""

    @property
    @abstractmethod
    def d(self) -> int:
        """The degree."""

    @abstractmethod
    def evaluate(self, x: np.ndarray) -> complex:
        """Evaluate the polynomial at x."""

    @abstractmethod
    def gradient(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the gradient of the polynomial at x."""

    @abstractmethod
    def to_sparse(self) -> Sparse:
        """Expand into the sparse monomial representation."""

    def check_point(self, x: np.ndarray) -> np.ndarray:
        """Coerce x into a vector of the right dimension."""
        arr = np.asarray(x)
        if not np.iscomplexobj(arr):
            arr = arr.astype(np.float64)
        if arr.shape != (self.n,):
            raise ValueError(
                f"Expected a point of dimension {self.n}, got shape {arr.shape}"
            )
        return arr


def exclusive_products(values: np.ndarray) -> np.ndarray:
    """Products of all entries but one along the last axis, without division."""
    prefix = np.ones_like(values)
    suffix = np.ones_like(values)
    if values.shape[-1] > 1:
        prefix[..., 1:] = np.cumprod(values[..., :-1], axis=-1)
        suffix[..., :-1] = np.cumprod(values[..., :0:-1], axis=-1)[..., ::-1]
    return prefix * suffix

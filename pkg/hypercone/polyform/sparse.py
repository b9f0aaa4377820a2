"""The sparse monomial polynomial form."""

# pylint: disable=invalid-name
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

import numpy as np

from .monomial import Monomial
from .polynomial_form import PolynomialForm, exclusive_products

MAX_ELESYM_EXPANSION = 20


class Sparse(PolynomialForm):
    """A polynomial stored as a list of monomials."""

    def __init__(
        self, n: int, monomials: Sequence[Monomial], d: int | None = None
    ) -> None:
        if n < 1:
            raise ValueError(f"A polynomial needs at least one variable, got n={n}")
        if not monomials and d is None:
            raise ValueError("An empty sparse polynomial needs an explicit degree")
        degrees = {x.degree for x in monomials}
        if d is None:
            d = degrees.pop() if len(degrees) == 1 else -1
        if d < 0 or any(x != d for x in degrees):
            raise ValueError(f"Monomials are not homogeneous: degrees {sorted(degrees)}")
        seen: set[tuple[int, ...]] = set()
        for monomial in monomials:
            if len(monomial.exponents) != n:
                raise ValueError(
                    f"Monomial {monomial.exponents} does not have {n} exponents"
                )
            if monomial.exponents in seen:
                raise ValueError(f"Duplicate monomial exponents: {monomial.exponents}")
            seen.add(monomial.exponents)
        self._n = n
        self._d = d
        self._monomials = tuple(monomials)
        self._exponents = np.array(
            [x.exponents for x in monomials], dtype=np.int64
        ).reshape(len(monomials), n)
        self._coefficients = np.array([x.coefficient for x in monomials])
        self._exponents.setflags(write=False)
        self._coefficients.setflags(write=False)

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return self._d

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        """The monomials of the polynomial."""
        return self._monomials

    def evaluate(self, x: np.ndarray) -> complex:
        x = self.check_point(x)
        powers = x[None, :] ** self._exponents
        return np.dot(np.prod(powers, axis=1), self._coefficients)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = self.check_point(x)
        if not self._monomials:
            return np.zeros_like(x)
        powers = x[None, :] ** self._exponents
        lowered = self._exponents * x[None, :] ** np.maximum(self._exponents - 1, 0)
        terms = lowered * exclusive_products(powers)
        return self._coefficients @ terms

    def to_sparse(self) -> Sparse:
        return self

    def directional_derivative(self, e: np.ndarray) -> Sparse:
        """The exact polynomial D_e p, of degree d - 1."""
        e = self.check_point(e)
        if self._d == 0:
            raise ValueError("A constant polynomial has no directional derivative")
        terms: dict[tuple[int, ...], float] = defaultdict(float)
        for monomial in self._monomials:
            for i, power in enumerate(monomial.exponents):
                if power == 0 or e[i] == 0.0:
                    continue
                lowered = list(monomial.exponents)
                lowered[i] -= 1
                terms[tuple(lowered)] += monomial.coefficient * power * float(e[i])
        return Sparse(self._n, _collect(terms), self._d - 1)

    @classmethod
    def elesym(cls, n: int, k: int) -> Sparse:
        """Expand the k-th elementary symmetric polynomial in n variables."""
        if n > MAX_ELESYM_EXPANSION:
            raise ValueError(
                f"Refusing to expand sigma_{{{n},{k}}}: n > {MAX_ELESYM_EXPANSION}"
            )
        if not 1 <= k <= n:
            raise ValueError(f"k={k} is out of range for n={n}")
        monomials = []
        for support in itertools.combinations(range(n), k):
            exponents = [0] * n
            for i in support:
                exponents[i] = 1
            monomials.append(Monomial(tuple(exponents), 1.0))
        return cls(n, monomials)

    @classmethod
    def from_linear_factors(cls, factors: np.ndarray) -> Sparse:
        """Multiply out a product of linear forms."""
        factors = np.asarray(factors, dtype=np.float64)
        d, n = factors.shape
        terms: dict[tuple[int, ...], float] = {tuple([0] * n): 1.0}
        for row in factors:
            product: dict[tuple[int, ...], float] = defaultdict(float)
            for exponents, coefficient in terms.items():
                for i, a in enumerate(row):
                    if a == 0.0:
                        continue
                    raised = list(exponents)
                    raised[i] += 1
                    product[tuple(raised)] += coefficient * float(a)
            terms = product
        return cls(n, _collect(terms), d)


def _collect(terms: dict[tuple[int, ...], float]) -> list[Monomial]:
    return [Monomial(k, v) for k, v in sorted(terms.items()) if v != 0.0]

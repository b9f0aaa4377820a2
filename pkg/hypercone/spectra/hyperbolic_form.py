"""A polynomial paired with its hyperbolicity direction."""

import numpy as np

from ..polyform import PolynomialForm


class HyperbolicForm:
    """A polynomial p hyperbolic along the direction e."""

    def __init__(self, poly: PolynomialForm, e: np.ndarray) -> None:
        e = poly.check_point(e)
        if np.iscomplexobj(e) or not np.all(np.isfinite(e)):
            raise ValueError("The hyperbolicity direction must be a finite real vector")
        pe = float(np.real(poly.evaluate(e)))
        if pe == 0.0:
            raise ValueError("p(e) must be nonzero")
        e = e.copy()
        e.setflags(write=False)
        self._poly = poly
        self._e = e
        self._pe = pe

    @property
    def poly(self) -> PolynomialForm:
        """The polynomial."""
        return self._poly

    @property
    def e(self) -> np.ndarray:
        """The hyperbolicity direction."""
        return self._e

    @property
    def pe(self) -> float:
        """The cached value p(e)."""
        return self._pe

    @property
    def n(self) -> int:
        """The number of variables."""
        return self._poly.n

    @property
    def d(self) -> int:
        """The degree, which is the number of eigenvalues."""
        return self._poly.d

"""The JSON formats of polynomial forms."""

import json
from typing import Any, TypedDict

from .elesym import EleSym
from .linear_factors import LinearFactors
from .monomial import Monomial
from .polynomial_form import PolynomialForm
from .sparse import Sparse

MonomialDict = TypedDict(
    "MonomialDict",
    {
        "exp": list[int],
        "coef": float,
    },
)
SparseDict = TypedDict(
    "SparseDict",
    {
        "n": int,
        "d": int,
        "monomials": list[MonomialDict],
    },
)
EleSymDict = TypedDict(
    "EleSymDict",
    {
        "elesym": dict[str, int],
    },
)
LinearFactorsDict = TypedDict(
    "LinearFactorsDict",
    {
        "factors": list[list[float]],
    },
)

_ELESYM_KEY = "elesym"
_FACTORS_KEY = "factors"
_MONOMIALS_KEY = "monomials"


def poly_from_dict(data: dict[str, Any]) -> PolynomialForm:
    """Build a polynomial form from its JSON dictionary."""
    if not isinstance(data, dict):
        raise ValueError(f"A polynomial must be a JSON object, got {type(data)}")
    try:
        if _ELESYM_KEY in data:
            return EleSym(int(data[_ELESYM_KEY]["n"]), int(data[_ELESYM_KEY]["k"]))
        if _FACTORS_KEY in data:
            return LinearFactors(data[_FACTORS_KEY])
        if _MONOMIALS_KEY in data:
            monomials = [
                Monomial(tuple(int(e) for e in x["exp"]), float(x["coef"]))
                for x in data[_MONOMIALS_KEY]
            ]
            return Sparse(int(data["n"]), monomials, int(data["d"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"Malformed polynomial: {exc}") from exc
    raise ValueError(f"Unrecognised polynomial keys: {sorted(data)}")


def poly_to_dict(poly: PolynomialForm) -> SparseDict | EleSymDict | LinearFactorsDict:
    """Serialise a polynomial form into its JSON dictionary."""
    if isinstance(poly, EleSym):
        return {_ELESYM_KEY: {"n": poly.n, "k": poly.k}}
    if isinstance(poly, LinearFactors):
        return {_FACTORS_KEY: poly.factors.tolist()}
    if isinstance(poly, Sparse):
        return {
            "n": poly.n,
            "d": poly.d,
            _MONOMIALS_KEY: [
                {"exp": list(x.exponents), "coef": x.coefficient}
                for x in poly.monomials
            ],
        }
    raise ValueError(f"Unrecognised polynomial form: {type(poly)}")


def load_poly(path: str) -> PolynomialForm:
    """Load a polynomial form from a JSON file."""
    with open(path, encoding="utf8") as handle:
        return poly_from_dict(json.load(handle))

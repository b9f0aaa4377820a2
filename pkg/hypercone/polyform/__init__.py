"""The hypercone polynomial form module."""

# ruff: noqa: F401
from .codec import load_poly, poly_from_dict, poly_to_dict
from .dir_deriv import DirDerivCoeffs, dir_deriv_coeffs, grad_dir_deriv
from .elesym import EleSym, elesym_coeffs, elesym_eval, elesym_grad
from .linear_factors import LinearFactors
from .monomial import Monomial
from .polynomial_form import PolynomialForm
from .sparse import Sparse

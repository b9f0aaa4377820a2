"""The hypercone spectra module."""

# ruff: noqa: F401
from .eigen import (DEFAULT_TOLERANCES, EigenSpectrum, count_zero, eigenvalues,
                    lambda_min, min_multiplicity, multiplicity_zero)
from .hyperbolic_form import HyperbolicForm
from .refine import refine_roots
from .roots import RootCluster, poly_roots, real_roots, root_clusters
from .tolerances import SpectraTolerances

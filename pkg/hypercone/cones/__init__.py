"""The hypercone cones module."""

# ruff: noqa: F401
from .cone_oracle import ConeOracle, boundary_tolerance
from .cone_spec import ConeKind, cone_from_dict, load_cone
from .hyperbolicity_cone import (ConjugateVector, DerivativeRelaxation,
                                 HyperbolicityCone, hyp_conjugate_vector)
from .isometric import isometric_dist, isometric_project
from .orthant import OrthantCone
from .p_cone import PCone, pcone_conjugate_vector, pcone_lambda_min, pcone_project

"""The smoothed eigenvalue gradient and an accelerated baseline."""

# ruff: noqa: F401
from .baseline import AGMConfig, AGMResult, agm_baseline
from .smoothing import (SmoothedTerms, SmoothingConfig, cluster_eigenvalues,
                        smoothed_grad, smoothed_max_eig, smoothed_terms,
                        smoothed_weights)

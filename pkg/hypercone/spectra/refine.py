"""Refinement of clustered eigenvalues by resampling around each cluster."""

import math
from typing import NamedTuple

import numpy as np

from ..polyform import dir_deriv_coeffs
from .hyperbolic_form import HyperbolicForm
from .roots import RootCluster, root_clusters

# Relative distance below which refined roots count as one.
COINCIDENCE_TOL = 1e-11
_WINDOW_MARGIN = 2.0
_PROGRESS = 0.5
_MAX_ZOOMS = 40
# Local roots beyond this modulus belong to other windows.
_LOCAL_REACH = 2.0
_MIN_LOG10_SCALE = -250.0


class Window(NamedTuple):
    """The real interval center +- radius, holding size roots."""

    center: float
    radius: float
    size: int


def _window(roots: np.ndarray, resolution: float) -> Window:
    center = float(np.mean(roots).real)
    if roots.shape[0] == 1:
        return Window(center, 0.0, 1)
    spread = float(np.max(np.abs(roots - center)))
    return Window(center, _WINDOW_MARGIN * max(spread, resolution), roots.shape[0])


def windows(clusters: list[RootCluster]) -> list[Window]:
    """Disjoint windows around the clusters, merging any that overlap."""
    groups = [
        (cluster.roots, cluster.radius if cluster.size > 1 else 0.0)
        for cluster in sorted(clusters, key=lambda cluster: cluster.center.real)
    ]
    merged = True
    while merged and len(groups) > 1:
        merged = False
        for idx in range(len(groups) - 1):
            left = _window(*groups[idx])
            right = _window(*groups[idx + 1])
            if left.center + left.radius >= right.center - right.radius:
                groups[idx : idx + 2] = [
                    (
                        np.concatenate([groups[idx][0], groups[idx + 1][0]]),
                        max(groups[idx][1], groups[idx + 1][1]),
                    )
                ]
                merged = True
                break
    return [_window(*group) for group in groups]


def _too_small(hp: HyperbolicForm, window: Window) -> bool:
    floor = COINCIDENCE_TOL * max(1.0, abs(window.center))
    if not math.isfinite(window.radius) or window.radius <= floor:
        return True
    return hp.d * math.log10(window.radius) + math.log10(abs(hp.pe)) < _MIN_LOG10_SCALE


def _zoom(hp: HyperbolicForm, x: np.ndarray, window: Window, depth: int) -> list[float]:
    """The roots of t -> p(x + te) in the window, resolved by resampling.

    The polynomial is sampled on the circle of the window's radius around
    its centre, so the roots inside become the roots of modulus below one
    of a local polynomial. A window the local polynomial does not account
    for collapses to its centre.
    """
    coincident = [window.center] * window.size
    if depth >= _MAX_ZOOMS or _too_small(hp, window):
        return coincident
    local = dir_deriv_coeffs(hp.poly, window.radius * hp.e, x + window.center * hp.e)
    inside = [
        cluster
        for cluster in root_clusters(local.values, within=_LOCAL_REACH)
        if abs(cluster.center) < 1.0
    ]
    if sum(cluster.size for cluster in inside) != window.size:
        return coincident
    values: list[float] = []
    for sub in windows(inside):
        center = window.center + window.radius * sub.center
        if sub.size == 1:
            values.append(center)
        elif sub.radius > _PROGRESS:
            values.extend([center] * sub.size)
        else:
            values.extend(
                _zoom(hp, x, Window(center, window.radius * sub.radius, sub.size), depth + 1)
            )
    return values


def refine_roots(
    hp: HyperbolicForm, x: np.ndarray, clusters: list[RootCluster]
) -> np.ndarray:
    """The roots of t -> p(x + te) with every cluster resolved by zooming in.

    Roots end up equal only when they coincide to within COINCIDENCE_TOL
    or sit below what evaluating the polynomial can tell apart.
    """
    values: list[float] = []
    for window in windows(clusters):
        if window.size == 1:
            values.append(window.center)
        else:
            values.extend(_zoom(hp, x, window, 0))
    return np.array(values)

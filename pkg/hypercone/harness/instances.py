"""Seeded benchmark instances."""

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..cones import ConeOracle, cone_from_dict

REJECT_THRESHOLD = -1e-4
MAX_REJECTIONS = 1000


@dataclass(frozen=True)
class InstanceSpec:
    """A cone specification and the seed and size of an instance set.

    Instance i is drawn from its own PCG64 stream, spawned as child i of
    SeedSequence(seed). A draw is kept when its minimum eigenvalue is at
    most reject_threshold.
    """

    cone: dict[str, Any] = field(hash=False)
    seed: int
    count: int
    reject_threshold: float = REJECT_THRESHOLD
    max_rejections: int = MAX_REJECTIONS

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError(f"count must be at least 1, got {self.count}")
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")
        if not self.reject_threshold < 0.0:
            raise ValueError(
                f"reject_threshold must be negative, got {self.reject_threshold}"
            )
        if self.max_rejections < 1:
            raise ValueError(
                f"max_rejections must be at least 1, got {self.max_rejections}"
            )

    def build_cone(self) -> ConeOracle:
        """The cone oracle the instances are drawn for."""
        return cone_from_dict(self.cone)


def _draw(
    cone: ConeOracle, rng: np.random.Generator, spec: InstanceSpec, index: int
) -> np.ndarray:
    for _ in range(spec.max_rejections):
        x = rng.standard_normal(cone.dim)
        if cone.lambda_min(x) <= spec.reject_threshold:
            return x
    raise ValueError(
        f"Instance {index}: {spec.max_rejections} consecutive draws were too close "
        "to the cone"
    )


def gen_instances(spec: InstanceSpec) -> list[np.ndarray]:
    """Draw the instance points of a spec."""
    cone = spec.build_cone()
    children = np.random.SeedSequence(spec.seed).spawn(spec.count)
    return [
        _draw(cone, np.random.Generator(np.random.PCG64(child)), spec, i)
        for i, child in enumerate(children)
    ]


def load_instance_spec(path: str) -> InstanceSpec:
    """Load an instance spec from a JSON file."""
    with open(path, encoding="utf8") as handle:
        data = json.load(handle)
    try:
        return InstanceSpec(
            cone=data["cone"],
            seed=int(data["seed"]),
            count=int(data["count"]),
            reject_threshold=float(data.get("reject_threshold", REJECT_THRESHOLD)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"Malformed instance spec {path}: {exc}") from exc

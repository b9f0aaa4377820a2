"""The main hypercone class for projecting onto cones."""

from typing import Any

import numpy as np

from .cones import ConeOracle, cone_from_dict
from .dfw import ConicProgram, DFWConfig, SolveResult, solve
from .polyform import PolynomialForm
from .spectra import HyperbolicForm, eigenvalues


class Hypercone:
    """The main hypercone class."""

    def create_cone(self, spec: dict[str, Any]) -> ConeOracle:
        """Creates a cone oracle."""
        return cone_from_dict(spec)

    def eigenvalues(
        self, poly: PolynomialForm, x: np.ndarray, e: np.ndarray | None = None
    ) -> np.ndarray:
        """The eigenvalues of x along e, which defaults to the ones vector."""
        direction = np.ones(poly.n) if e is None else e
        return eigenvalues(HyperbolicForm(poly, direction), x).values

    def project(
        self, cone: ConeOracle, x0: np.ndarray, config: DFWConfig = DFWConfig()
    ) -> SolveResult:
        """Projects x0 onto a cone."""
        return self.solve(ConicProgram.projection(cone, x0), config)

    def solve(self, program: ConicProgram, config: DFWConfig = DFWConfig()) -> SolveResult:
        """Solves a conic program."""
        return solve(program, config)

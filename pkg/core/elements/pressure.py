"""
Discontinuous pressure elements. The shape functions are the monomials
themselves: {1, xi, eta} on quadrilaterals and the constant on triangles.
Coefficients are cell moments, so there are no DOF functionals.
"""

import numpy as np

from core.mesh.geometry import AffineChart
from core.mesh.mesh import CellKind
from .base_element import BaseElement
from .local_basis import P1


class PressureP1Element(BaseElement):
    family = 'pressure'
    cell_kind = CellKind.QUAD
    exponents = P1

    @staticmethod
    def get_id() -> str:
        return "pressure-p1"

    @staticmethod
    def get_name() -> str:
        return "Discontinuous P1"

    def coefficients(self, chart: AffineChart, vertices) -> np.ndarray:
        return np.eye(3)


class PressureP0Element(BaseElement):
    family = 'pressure'
    cell_kind = CellKind.TRIANGLE
    exponents = ((0, 0),)

    @staticmethod
    def get_id() -> str:
        return "pressure-p0"

    @staticmethod
    def get_name() -> str:
        return "Discontinuous P0"

    def coefficients(self, chart: AffineChart, vertices) -> np.ndarray:
        return np.eye(1)

"""
Nonconforming P1 (Crouzeix-Raviart) element on triangles. Local edge i runs
from vertex i to vertex i + 1; its dual function is 1 - 2 lambda_k with k the
vertex opposite the edge.
"""

import numpy as np

from core.mesh.geometry import AffineChart
from core.mesh.mesh import CellKind
from .base_element import BaseElement
from .functionals import EdgeAverage
from .local_basis import P1, LocalBasis

# Rows over (1, lambda_1, lambda_2); lambda_0 = 1 - lambda_1 - lambda_2
TRI_P1NC_COEFFICIENTS = np.array([
    [1.0, 0.0, -2.0],   # edge v0 v1: 1 - 2 lambda_2
    [-1.0, 2.0, 2.0],   # edge v1 v2: 1 - 2 lambda_0
    [1.0, -2.0, 0.0],   # edge v2 v0: 1 - 2 lambda_1
])


class TriP1ncElement(BaseElement):
    family = 'qltz'
    cell_kind = CellKind.TRIANGLE
    exponents = P1

    @staticmethod
    def get_id() -> str:
        return "tri-p1nc"

    @staticmethod
    def get_name() -> str:
        return "Nonconforming P1 (Crouzeix-Raviart)"

    def functionals(self, vertices, degree: int = None):
        v = np.asarray(vertices, dtype=float)
        return [EdgeAverage(v[i], v[(i + 1) % 3], degree) for i in range(3)]

    def coefficients(self, chart: AffineChart, vertices) -> np.ndarray:
        return TRI_P1NC_COEFFICIENTS.copy()


def tri_p1nc_basis(vertices) -> LocalBasis:
    return TriP1ncElement().basis(vertices)

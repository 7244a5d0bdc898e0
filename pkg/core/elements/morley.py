"""
Morley elements: vertex values and edge averages of the outward normal
derivative. On quadrilaterals the space is P2 + span{xi^3, eta^3}; on
triangles it is P2. Neither dual basis has a closed form here, so the
DOF-on-monomial matrix is inverted per cell.
"""

import numpy as np

from core.mesh.geometry import QuadFrame
from core.mesh.mesh import CellKind
from .base_element import BaseElement
from .functionals import EdgeNormalDerivativeAverage, VertexValue, outward_normal
from .local_basis import P2, LocalBasis

QUAD_MORLEY_EXPONENTS = P2 + ((3, 0), (0, 3))


def morley_functionals(vertices, degree: int = None):
    v = np.asarray(vertices, dtype=float)
    n = len(v)
    edges = [(v[i], v[(i + 1) % n]) for i in range(n)]
    return ([VertexValue(p) for p in v]
            + [EdgeNormalDerivativeAverage(p0, p1, outward_normal(p0, p1), degree) for p0, p1 in edges])


class QuadMorleyElement(BaseElement):
    family = 'morley'
    cell_kind = CellKind.QUAD
    exponents = QUAD_MORLEY_EXPONENTS

    @staticmethod
    def get_id() -> str:
        return "quad-morley"

    @staticmethod
    def get_name() -> str:
        return "Quadrilateral Morley (P2 + xi^3, eta^3)"

    def functionals(self, vertices, degree: int = None):
        return morley_functionals(vertices, degree)


class TriMorleyElement(BaseElement):
    family = 'morley'
    cell_kind = CellKind.TRIANGLE
    exponents = P2

    @staticmethod
    def get_id() -> str:
        return "tri-morley"

    @staticmethod
    def get_name() -> str:
        return "Triangular Morley (P2)"

    def functionals(self, vertices, degree: int = None):
        return morley_functionals(vertices, degree)


def quad_morley_basis(frame: QuadFrame) -> LocalBasis:
    return QuadMorleyElement().basis(frame.vertices())


def tri_morley_basis(vertices) -> LocalBasis:
    return TriMorleyElement().basis(vertices)

"""
QLTZ element: P1 + span{xi^2, eta^2} on a convex quadrilateral with the
cell average and the four edge averages as degrees of freedom.

The dual basis has closed forms in (xi, eta) depending only on the frame
parameters alpha and beta:

    phi0 = -3 (3 xi^2 + 3 eta^2 - 2 alpha xi - 2 beta eta - (4 + alpha^2 + beta^2)) / (2 D)
    phi1 = -3/4 xi^2 + (beta - 1)/2 eta + (3 + beta^2)/4 - (beta^2 - beta + 3)/6 phi0
    phi2 = -3/4 eta^2 + (alpha - 1)/2 xi + (3 + alpha^2)/4 - (alpha^2 - alpha + 3)/6 phi0
    phi3 = -3/4 xi^2 + (beta + 1)/2 eta + (3 + beta^2)/4 - (beta^2 + beta + 3)/6 phi0
    phi4 = -3/4 eta^2 + (alpha + 1)/2 xi + (3 + alpha^2)/4 - (alpha^2 + alpha + 3)/6 phi0

with D = alpha^2 + beta^2 + 3. phi0 has unit cell average and zero edge
averages; phi_i (i >= 1) has unit average on edge e_i.
"""

import numpy as np

from core import logger
from core.errors import SingularStep2
from core.mesh.geometry import AffineChart, QuadFrame, quad_frame
from core.mesh.mesh import CellKind
from .base_element import BaseElement
from .functionals import CellAverage, EdgeAverage
from .local_basis import LocalBasis
from .quadrature import cell_rule

# Monomials 1, xi, eta, xi^2, eta^2 in chart coordinates (u, v) = (xi, eta)
QLTZ_EXPONENTS = ((0, 0), (1, 0), (0, 1), (2, 0), (0, 2))


def qltz_coefficients(alpha: float, beta: float) -> np.ndarray:
    d = alpha ** 2 + beta ** 2 + 3.0
    c = -3.0 / (2.0 * d)
    phi0 = np.array([-c * (4.0 + alpha ** 2 + beta ** 2), -2.0 * alpha * c, -2.0 * beta * c, 3.0 * c, 3.0 * c])
    rows = [
        (np.array([(3 + beta ** 2) / 4, 0.0, (beta - 1) / 2, -0.75, 0.0]), (beta ** 2 - beta + 3) / 6),
        (np.array([(3 + alpha ** 2) / 4, (alpha - 1) / 2, 0.0, 0.0, -0.75]), (alpha ** 2 - alpha + 3) / 6),
        (np.array([(3 + beta ** 2) / 4, 0.0, (beta + 1) / 2, -0.75, 0.0]), (beta ** 2 + beta + 3) / 6),
        (np.array([(3 + alpha ** 2) / 4, (alpha + 1) / 2, 0.0, 0.0, -0.75]), (alpha ** 2 + alpha + 3) / 6),
    ]
    return np.vstack([phi0] + [base - k * phi0 for base, k in rows])


class QltzElement(BaseElement):
    family = 'qltz'
    cell_kind = CellKind.QUAD
    exponents = QLTZ_EXPONENTS

    @staticmethod
    def get_id() -> str:
        return "qltz"

    @staticmethod
    def get_name() -> str:
        return "QLTZ (P1 + xi^2, eta^2)"

    def functionals(self, vertices, degree: int = None):
        v = np.asarray(vertices, dtype=float)
        return [CellAverage(v, degree)] + [EdgeAverage(v[i], v[(i + 1) % 4], degree) for i in range(4)]

    def coefficients(self, chart: AffineChart, vertices) -> np.ndarray:
        frame = quad_frame(vertices)
        return qltz_coefficients(frame.alpha, frame.beta)


def qltz_basis(frame: QuadFrame) -> LocalBasis:
    return QltzElement().basis(frame.vertices())


def qltz_eval(frame: QuadFrame, points) -> tuple[np.ndarray, np.ndarray]:
    """Values (n, 5) and physical gradients (n, 5, 2) of phi0..phi4."""
    basis = LocalBasis(QltzElement.get_id(), frame.chart(), QLTZ_EXPONENTS,
                       qltz_coefficients(frame.alpha, frame.beta))
    return basis.values(points), basis.gradients(points)


def step2_matrix(frame: QuadFrame) -> np.ndarray:
    """
    Moments of grad phi0 against eta (first row) and xi (second row):

        M = [[int dx(phi0) eta, int dy(phi0) eta],
             [int dx(phi0) xi,  int dy(phi0) xi ]]

    This is the matrix that fixes the two cell coefficients of the vector
    interpolant. With this row order its determinant equals
    (-48a^4 - 48b^4 + 96a^2b^2 + 96a^2 + 96b^2 + 144) / (a^2 + b^2 + 3)^2 * (r x s),
    which is positive on every convex cell.
    """
    rule = cell_rule(frame.vertices(), 2)
    _, gradients = qltz_eval(frame, rule.points)
    uv = frame.chart().to_local(rule.points)
    moments = np.column_stack((uv[:, 1], uv[:, 0]))
    matrix = np.einsum('q,qk,qc->kc', rule.weights, moments, gradients[:, 0, :])

    det = float(np.linalg.det(matrix))
    if det <= 0.0:
        logger.error(f"Step-2 matrix singular: det={det:.3e}, alpha={frame.alpha}, beta={frame.beta}")
        raise SingularStep2(f"step-2 determinant {det:.3e} is not positive")
    return matrix


def step2_determinant(alpha: float, beta: float, cross: float) -> float:
    a2, b2 = alpha ** 2, beta ** 2
    numerator = -48 * a2 ** 2 - 48 * b2 ** 2 + 96 * a2 * b2 + 96 * a2 + 96 * b2 + 144
    return numerator / (a2 + b2 + 3) ** 2 * cross

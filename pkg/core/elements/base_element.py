"""
Abstract base class for local finite elements.
"""

from abc import ABC, abstractmethod

import numpy as np

from core.config import FemConfig
from core.errors import IllConditioned
from core.mesh.geometry import AffineChart, cell_chart
from core.mesh.mesh import CellKind
from .functionals import DofFunctional
from .local_basis import Exponents, LocalBasis, monomial_gradients, monomial_values


class BaseElement(ABC):
    """
    A local element: a polynomial space on one cell kind, written in the
    chart coordinates, together with its degrees of freedom.
    """

    family: str = None
    cell_kind: CellKind = None
    exponents: Exponents = ()

    @staticmethod
    @abstractmethod
    def get_id() -> str:
        """IMPORTANT: Stable identifier used in APIs. Do not change once set."""
        pass

    @staticmethod
    @abstractmethod
    def get_name() -> str:
        pass

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    def functionals(self, vertices, degree: int = None) -> list[DofFunctional]:
        return []

    def coefficients(self, chart: AffineChart, vertices) -> np.ndarray:
        return dual_coefficients(self.functionals(vertices), self.exponents, chart)

    def basis(self, vertices) -> LocalBasis:
        vertices = np.asarray(vertices, dtype=float)
        chart = cell_chart(vertices)
        return LocalBasis(self.get_id(), chart, self.exponents,
                          self.coefficients(chart, vertices), self.functionals(vertices))


def dual_coefficients(functionals: list[DofFunctional], exponents: Exponents, chart: AffineChart) -> np.ndarray:
    """
    Coefficients of the basis dual to `functionals`: C = inv(D).T with
    D[i, m] = d_i(monomial m). Rows of D are scaled to unit size before the
    condition estimate.
    """
    def values(points):
        return monomial_values(exponents, chart.to_local(points))

    def gradients(points):
        return monomial_gradients(exponents, chart.to_local(points), chart)

    dof_matrix = np.array([f.evaluate(values, gradients) for f in functionals])
    scales = np.array([f.scale for f in functionals])
    scaled = scales[:, None] * dof_matrix

    limit = FemConfig().condition_limit
    condition = np.linalg.cond(scaled)
    if not np.isfinite(condition) or condition > limit:
        raise IllConditioned(f"DOF matrix condition {condition:.3e} exceeds {limit:.1e}")

    return (np.linalg.inv(scaled) * scales[None, :]).T

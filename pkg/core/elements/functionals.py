"""
Degrees of freedom as linear functionals on cell polynomials.

`evaluate(values, gradients)` takes callables mapping (n, 2) points to
(n, k) values and (n, k, 2) gradients and returns the k functional values.
"""

from abc import ABC, abstractmethod

import numpy as np

from .quadrature import cell_rule, edge_rule


class DofFunctional(ABC):
    # Exact for the cubic shape functions used here
    degree = 6

    @abstractmethod
    def evaluate(self, values, gradients=None) -> np.ndarray:
        pass

    @property
    def scale(self) -> float:
        """Factor that makes the functional dimensionless in the cell size."""
        return 1.0


class VertexValue(DofFunctional):
    def __init__(self, point):
        self.point = np.asarray(point, dtype=float)

    def evaluate(self, values, gradients=None) -> np.ndarray:
        return np.asarray(values(self.point[None, :]))[0]


class EdgeAverage(DofFunctional):
    def __init__(self, p0, p1, degree: int = None):
        self.rule = edge_rule(p0, p1, self.degree if degree is None else degree)
        self.length = float(np.linalg.norm(np.asarray(p1, dtype=float) - np.asarray(p0, dtype=float)))

    def evaluate(self, values, gradients=None) -> np.ndarray:
        return self.rule.integrate(values) / self.length


class EdgeNormalDerivativeAverage(DofFunctional):
    def __init__(self, p0, p1, normal, degree: int = None):
        self.rule = edge_rule(p0, p1, self.degree if degree is None else degree)
        self.length = float(np.linalg.norm(np.asarray(p1, dtype=float) - np.asarray(p0, dtype=float)))
        self.normal = np.asarray(normal, dtype=float)

    def evaluate(self, values, gradients=None) -> np.ndarray:
        return self.rule.integrate(lambda p: np.asarray(gradients(p)) @ self.normal) / self.length

    @property
    def scale(self) -> float:
        return self.length


class CellAverage(DofFunctional):
    def __init__(self, vertices, degree: int = None):
        self.rule = cell_rule(vertices, self.degree if degree is None else degree)
        self.area = float(np.sum(self.rule.weights))

    def evaluate(self, values, gradients=None) -> np.ndarray:
        return self.rule.integrate(values) / self.area


def outward_normal(p0, p1) -> np.ndarray:
    """Outward unit normal of a counter-clockwise edge p0 -> p1."""
    t = np.asarray(p1, dtype=float) - np.asarray(p0, dtype=float)
    t = t / np.linalg.norm(t)
    return np.array([t[1], -t[0]])

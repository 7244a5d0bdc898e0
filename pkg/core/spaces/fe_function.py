"""
Finite element functions: a DofMap plus a coefficient vector, evaluated
cell by cell. Derivatives are broken (taken inside one cell).
"""

import numpy as np

from core.errors import PointOutsideCell
from .dofmap import DofMap


class FeFunction:
    def __init__(self, dofmap: DofMap, coefficients=None):
        self.dofmap = dofmap
        if coefficients is None:
            coefficients = np.zeros(dofmap.size)
        coefficients = np.asarray(coefficients, dtype=float)
        if coefficients.shape != (dofmap.size,):
            raise ValueError(f"expected {dofmap.size} coefficients, got {coefficients.shape}")
        self.coefficients = coefficients

    @property
    def mesh(self):
        return self.dofmap.mesh

    @property
    def components(self) -> int:
        return self.dofmap.components

    def local_coefficients(self, k: int) -> np.ndarray:
        """(components, n_basis) local coefficients including the edge signs."""
        rows = []
        signs = self.dofmap.cell_signs[k]
        for c in range(self.components):
            dofs = self.dofmap.component_dofs(k, c)
            local = np.where(dofs >= 0, self.coefficients[np.maximum(dofs, 0)], 0.0)
            rows.append(local * signs)
        return np.array(rows)

    def _combine(self, k: int, local_values: np.ndarray) -> np.ndarray:
        # local_values: (n, n_basis, ...); result (n, ...) or (n, 2, ...) for vectors
        coefficients = self.local_coefficients(k)
        combined = np.einsum('cb,nb...->nc...', coefficients, local_values)
        return combined[:, 0] if self.components == 1 else combined

    def values(self, k: int, points) -> np.ndarray:
        return self._combine(k, self.dofmap.local_basis(k).values(points))

    def gradients(self, k: int, points) -> np.ndarray:
        return self._combine(k, self.dofmap.local_basis(k).gradients(points))

    def hessians(self, k: int, points) -> np.ndarray:
        return self._combine(k, self.dofmap.local_basis(k).hessians(points))

    def divergences(self, k: int, points) -> np.ndarray:
        if self.components != 2:
            raise ValueError("divergence needs a vector field")
        g = self.gradients(k, points)
        return g[:, 0, 0] + g[:, 1, 1]

    def curls(self, k: int, points) -> np.ndarray:
        """(d_y f, -d_x f) for scalars; d_x f2 - d_y f1 for vectors."""
        g = self.gradients(k, points)
        if self.components == 1:
            return np.column_stack((g[:, 1], -g[:, 0]))
        return g[:, 1, 0] - g[:, 0, 1]

    def on_cell(self, k: int) -> 'CellRestriction':
        return CellRestriction(self, k)

    def __add__(self, other: 'FeFunction') -> 'FeFunction':
        if other.dofmap is not self.dofmap:
            raise ValueError("functions live on different DofMaps")
        return FeFunction(self.dofmap, self.coefficients + other.coefficients)

    def __sub__(self, other: 'FeFunction') -> 'FeFunction':
        if other.dofmap is not self.dofmap:
            raise ValueError("functions live on different DofMaps")
        return FeFunction(self.dofmap, self.coefficients - other.coefficients)

    def __mul__(self, scalar: float) -> 'FeFunction':
        return FeFunction(self.dofmap, scalar * self.coefficients)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"FeFunction({self.dofmap.kind.value}, components={self.components})"


class CellRestriction:
    """The polynomial of an FeFunction on one cell, usable as a smooth field."""

    def __init__(self, function: FeFunction, k: int):
        self.function = function
        self.k = k

    def __call__(self, points) -> np.ndarray:
        return self.function.values(self.k, points)

    def gradient(self, points) -> np.ndarray:
        return self.function.gradients(self.k, points)

    def hessian(self, points) -> np.ndarray:
        return self.function.hessians(self.k, points)

    def divergence(self, points) -> np.ndarray:
        return self.function.divergences(self.k, points)


def _point(f: FeFunction, k: int, p) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(1, 2)
    if not f.mesh.contains(k, p[0]):
        raise PointOutsideCell(f"point {p[0].tolist()} is outside cell {k}")
    return p


def evaluate(f: FeFunction, k: int, p):
    return f.values(k, _point(f, k, p))[0]


def broken_grad(f: FeFunction, k: int, p) -> np.ndarray:
    return f.gradients(k, _point(f, k, p))[0]


def broken_div(f: FeFunction, k: int, p) -> float:
    return float(f.divergences(k, _point(f, k, p))[0])


def broken_curl(f: FeFunction, k: int, p):
    return f.curls(k, _point(f, k, p))[0]


def broken_hessian(f: FeFunction, k: int, p) -> np.ndarray:
    return f.hessians(k, _point(f, k, p))[0]

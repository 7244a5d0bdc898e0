"""
Polynomial shape functions written in the local coordinates (u, v) of a cell
chart. A basis is a coefficient matrix C over a list of monomials u^a v^b:
phi_i = sum_m C[i, m] u^a_m v^b_m. Physical derivatives use the constant
gradients of u and v (rows of the inverse chart matrix).
"""

import numpy as np

from core.mesh.geometry import AffineChart

Exponents = tuple[tuple[int, int], ...]

P1 = ((0, 0), (1, 0), (0, 1))
P2 = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def _pow(x: np.ndarray, k: int) -> np.ndarray:
    return x ** k if k >= 0 else np.zeros_like(x)


def monomial_values(exponents: Exponents, uv: np.ndarray) -> np.ndarray:
    u, v = uv[:, 0], uv[:, 1]
    return np.column_stack([_pow(u, a) * _pow(v, b) for a, b in exponents])


def monomial_gradients(exponents: Exponents, uv: np.ndarray, chart: AffineChart) -> np.ndarray:
    """(n_points, n_monomials, 2)"""
    u, v = uv[:, 0], uv[:, 1]
    g = chart.inverse
    du = np.column_stack([a * _pow(u, a - 1) * _pow(v, b) for a, b in exponents])
    dv = np.column_stack([b * _pow(u, a) * _pow(v, b - 1) for a, b in exponents])
    return du[:, :, None] * g[0] + dv[:, :, None] * g[1]


def monomial_hessians(exponents: Exponents, uv: np.ndarray, chart: AffineChart) -> np.ndarray:
    """(n_points, n_monomials, 2, 2)"""
    u, v = uv[:, 0], uv[:, 1]
    g = chart.inverse
    uu = np.column_stack([a * (a - 1) * _pow(u, a - 2) * _pow(v, b) for a, b in exponents])
    uv_ = np.column_stack([a * b * _pow(u, a - 1) * _pow(v, b - 1) for a, b in exponents])
    vv = np.column_stack([b * (b - 1) * _pow(u, a) * _pow(v, b - 2) for a, b in exponents])
    guu = np.outer(g[0], g[0])
    guv = np.outer(g[0], g[1]) + np.outer(g[1], g[0])
    gvv = np.outer(g[1], g[1])
    return uu[:, :, None, None] * guu + uv_[:, :, None, None] * guv + vv[:, :, None, None] * gvv


class LocalBasis:
    def __init__(self, element_id: str, chart: AffineChart, exponents: Exponents,
                 coefficients: np.ndarray, functionals: list = None):
        self.element_id = element_id
        self.chart = chart
        self.exponents = tuple(exponents)
        self.coefficients = np.asarray(coefficients, dtype=float)
        self.functionals = functionals or []

    @property
    def n_basis(self) -> int:
        return self.coefficients.shape[0]

    @property
    def degree(self) -> int:
        return max(a + b for a, b in self.exponents)

    def _local(self, points) -> np.ndarray:
        return self.chart.to_local(np.atleast_2d(np.asarray(points, dtype=float)))

    def values(self, points) -> np.ndarray:
        """(n_points, n_basis)"""
        return monomial_values(self.exponents, self._local(points)) @ self.coefficients.T

    def gradients(self, points) -> np.ndarray:
        """(n_points, n_basis, 2)"""
        grads = monomial_gradients(self.exponents, self._local(points), self.chart)
        return np.einsum('bm,nmk->nbk', self.coefficients, grads)

    def hessians(self, points) -> np.ndarray:
        """(n_points, n_basis, 2, 2)"""
        hess = monomial_hessians(self.exponents, self._local(points), self.chart)
        return np.einsum('bm,nmkl->nbkl', self.coefficients, hess)

    def dof_matrix(self) -> np.ndarray:
        """D[i, j] = d_i(phi_j); the identity for a unisolvent dual basis."""
        return np.array([f.evaluate(self.values, self.gradients) for f in self.functionals])

    def __repr__(self) -> str:
        return f"LocalBasis({self.element_id}, n_basis={self.n_basis})"

"""
Gauss quadrature on cells and edges.

Triangles use a collapsed (Duffy) tensor Gauss-Legendre rule, quadrilaterals
are split into two triangles along the a1-a3 diagonal, and edges use plain
Gauss-Legendre. Rules are exact for polynomials up to the requested degree.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from core.config import MAX_QUADRATURE_DEGREE, FemConfig
from core.errors import UnsupportedDegree

MAX_DEGREE = MAX_QUADRATURE_DEGREE


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    points: np.ndarray
    weights: np.ndarray
    degree: int

    def integrate(self, f):
        values = np.asarray(f(self.points), dtype=float)
        return np.tensordot(self.weights, values, axes=(0, 0))


def _check_degree(degree: int) -> int:
    if degree is None:
        degree = FemConfig().quadrature_degree
    if int(degree) != degree or not 0 <= degree <= MAX_DEGREE:
        raise UnsupportedDegree(f"quadrature degree must be an integer in [0, {MAX_DEGREE}], got {degree}")
    return int(degree)


@lru_cache(maxsize=None)
def _gauss_unit_interval(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


@lru_cache(maxsize=None)
def reference_triangle_rule(degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Rule on the triangle (0,0), (1,0), (0,1); weights sum to 1/2."""
    # The collapse adds one degree in the first direction
    n = (degree + 3) // 2
    x, w = _gauss_unit_interval(n)
    u, v = np.meshgrid(x, x, indexing='ij')
    wu, wv = np.meshgrid(w, w, indexing='ij')
    points = np.column_stack((u.ravel(), (v * (1.0 - u)).ravel()))
    weights = (wu * wv * (1.0 - u)).ravel()
    return points, weights


def triangle_rule(vertices, degree: int = None) -> QuadratureRule:
    degree = _check_degree(degree)
    v = np.asarray(vertices, dtype=float)
    ref_points, ref_weights = reference_triangle_rule(degree)
    jac = np.column_stack((v[1] - v[0], v[2] - v[0]))
    points = v[0] + ref_points @ jac.T
    weights = ref_weights * abs(np.linalg.det(jac))
    return QuadratureRule(points, weights, degree)


def cell_rule(vertices, degree: int = None, diagonal: int = 0) -> QuadratureRule:
    """
    Rule on a triangle or convex quadrilateral. For quadrilaterals `diagonal`
    picks the splitting diagonal (0: a1-a3, 1: a2-a4); both give the same
    integrals for polynomials of the declared degree.
    """
    degree = _check_degree(degree)
    v = np.asarray(vertices, dtype=float)
    if len(v) == 3:
        return triangle_rule(v, degree)
    if diagonal == 0:
        halves = (v[[0, 1, 2]], v[[0, 2, 3]])
    else:
        halves = (v[[1, 2, 3]], v[[1, 3, 0]])
    first, second = (triangle_rule(t, degree) for t in halves)
    return QuadratureRule(
        np.vstack((first.points, second.points)),
        np.concatenate((first.weights, second.weights)),
        degree
    )


def edge_rule(p0, p1, degree: int = None) -> QuadratureRule:
    degree = _check_degree(degree)
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    x, w = _gauss_unit_interval(degree // 2 + 1)
    points = p0 + np.outer(x, p1 - p0)
    return QuadratureRule(points, w * float(np.linalg.norm(p1 - p0)), degree)


def integrate_cell(vertices, f, degree: int = None):
    return cell_rule(vertices, degree).integrate(f)


def integrate_edge(p0, p1, f, degree: int = None):
    return edge_rule(p0, p1, degree).integrate(f)

"""
Cell geometry: affine charts and the midpoint frame of a convex quadrilateral.

A quadrilateral a1 a2 a3 a4 (counter-clockwise) is described by the
midpoints m1..m4 of its edges a1a2, a2a3, a3a4, a4a1. With

    O = (m1 + m3) / 2,   r = m3 - O,   s = m4 - O

every point is p = O + eta * r + xi * s, and the fourth vertex satisfies
a4 = O + r + s + alpha * r + beta * s. The pair (alpha, beta) measures how far
the cell is from a parallelogram; the cell is convex iff |alpha| + |beta| < 1.
"""

from dataclasses import dataclass

import numpy as np

from core.config import FemConfig
from core.errors import BadOrientation, Degenerate, NonConvex


def cross2(a, b):
    """z-component of the cross product of 2-vectors (broadcasts)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


@dataclass(frozen=True, eq=False)
class AffineChart:
    """
    Affine map (u, v) -> origin + u * matrix[:, 0] + v * matrix[:, 1].

    Local polynomial bases are written in (u, v); physical derivatives are
    obtained through the rows of the inverse matrix (grad u, grad v).
    """
    origin: np.ndarray
    matrix: np.ndarray

    @property
    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def to_local(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return (points - self.origin) @ self.inverse.T

    def to_physical(self, uv) -> np.ndarray:
        uv = np.asarray(uv, dtype=float)
        return self.origin + uv @ self.matrix.T


@dataclass(frozen=True, eq=False)
class QuadFrame:
    origin: np.ndarray
    r: np.ndarray
    s: np.ndarray
    alpha: float
    beta: float
    cross: float

    def chart(self) -> AffineChart:
        """Chart with u = xi, v = eta."""
        return AffineChart(self.origin, np.column_stack((self.s, self.r)))

    def vertices(self) -> np.ndarray:
        eta_xi = frame_vertex_coordinates(self.alpha, self.beta)
        return self.origin + np.outer(eta_xi[:, 0], self.r) + np.outer(eta_xi[:, 1], self.s)


def frame_vertex_coordinates(alpha: float, beta: float) -> np.ndarray:
    """(eta, xi) of a1..a4 in the midpoint frame."""
    return np.array([
        [-1.0 - alpha, 1.0 - beta],
        [-1.0 + alpha, -1.0 + beta],
        [1.0 - alpha, -1.0 - beta],
        [1.0 + alpha, 1.0 + beta],
    ])


def quad_frame(vertices, convexity_tol: float = None, area_tol: float = None) -> QuadFrame:
    a = np.asarray(vertices, dtype=float).reshape(4, 2)
    config = FemConfig()
    if convexity_tol is None:
        convexity_tol = config.convexity_tolerance
    if area_tol is None:
        area_tol = config.area_tolerance

    for i in range(4):
        for j in range(i + 1, 4):
            if np.allclose(a[i], a[j], rtol=0.0, atol=1e-14):
                raise Degenerate(f"vertices {i} and {j} coincide")

    m = 0.5 * (a + np.roll(a, -1, axis=0))
    origin = 0.5 * (m[0] + m[2])
    r = m[2] - origin
    s = m[3] - origin
    cross = float(cross2(r, s))
    scale = np.linalg.norm(r) * np.linalg.norm(s)

    if abs(cross) <= area_tol * max(scale, 1e-300):
        raise Degenerate(f"zero area (r x s = {cross:.3e})")
    if cross < 0:
        raise BadOrientation("vertices are ordered clockwise")

    d = a[3] - origin - r - s
    alpha, beta = np.linalg.solve(np.column_stack((r, s)), d)
    if abs(alpha) + abs(beta) >= 1.0 - convexity_tol:
        raise NonConvex(f"|alpha| + |beta| = {abs(alpha) + abs(beta):.6f} >= 1")

    return QuadFrame(origin, r, s, float(alpha), float(beta), cross)


def xi_eta(frame: QuadFrame, points) -> tuple[np.ndarray, np.ndarray]:
    uv = frame.chart().to_local(points)
    return uv[..., 0], uv[..., 1]


def shape_regularity(frame: QuadFrame) -> float:
    nr = np.linalg.norm(frame.r)
    ns = np.linalg.norm(frame.s)
    return float(max(nr * ns / frame.cross, nr / ns, ns / nr))


def signed_area(vertices) -> float:
    p = np.asarray(vertices, dtype=float)
    q = np.roll(p, -1, axis=0)
    return 0.5 * float(np.sum(cross2(p, q)))


def triangle_chart(vertices, area_tol: float = None) -> AffineChart:
    """Chart with u = lambda_1, v = lambda_2 (barycentric of v1, v2)."""
    v = np.asarray(vertices, dtype=float).reshape(3, 2)
    if area_tol is None:
        area_tol = FemConfig().area_tolerance
    e1 = v[1] - v[0]
    e2 = v[2] - v[0]
    area2 = float(cross2(e1, e2))
    if abs(area2) <= area_tol * max(np.linalg.norm(e1) * np.linalg.norm(e2), 1e-300):
        raise Degenerate("zero area triangle")
    if area2 < 0:
        raise BadOrientation("vertices are ordered clockwise")
    return AffineChart(v[0].copy(), np.column_stack((e1, e2)))


def cell_chart(vertices) -> AffineChart:
    vertices = np.asarray(vertices, dtype=float)
    if len(vertices) == 4:
        return quad_frame(vertices).chart()
    return triangle_chart(vertices)


def contains(vertices, point, tol: float = 1e-12) -> bool:
    """Closed point-in-convex-polygon test for a ccw polygon."""
    v = np.asarray(vertices, dtype=float)
    p = np.asarray(point, dtype=float)
    w = np.roll(v, -1, axis=0)
    scale = max(float(np.max(np.abs(w - v))), 1e-300)
    return bool(np.all(cross2(w - v, p - v) >= -tol * scale * scale))

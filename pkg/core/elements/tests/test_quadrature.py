import numpy as np
import pytest

from core.errors import UnsupportedDegree
from core.elements.quadrature import cell_rule, edge_rule, integrate_cell, integrate_edge
from core.mesh.geometry import quad_frame, xi_eta


def _shoelace(p):
    q = np.roll(p, -1, axis=0)
    return 0.5 * np.sum(p[:, 0] * q[:, 1] - p[:, 1] * q[:, 0])


def _frame_integrand(frame, fn):
    def integrand(points):
        xi, eta = xi_eta(frame, points)
        return fn(xi, eta)
    return integrand


class TestCellQuadrature:
    def test_area_matches_shoelace(self, rng):
        for _ in range(1000):
            p = np.array([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]) + rng.uniform(-0.2, 0.2, (4, 2))
            area = integrate_cell(p, lambda x: np.ones(len(x)), 0)
            assert area == pytest.approx(_shoelace(p), rel=1e-12)

    def test_reference_triangle_monomials(self, reference_triangle):
        # int x^a y^b over the reference triangle = a! b! / (a + b + 2)!
        from math import factorial
        for a in range(6):
            for b in range(6 - a):
                exact = factorial(a) * factorial(b) / factorial(a + b + 2)
                value = integrate_cell(reference_triangle, lambda x: x[:, 0] ** a * x[:, 1] ** b, a + b)
                assert value == pytest.approx(exact, rel=1e-13)

    def test_domain_averages(self, random_convex_quads):
        for quad in random_convex_quads:
            frame = quad_frame(quad)
            a, b, rs = frame.alpha, frame.beta, frame.cross
            cases = [
                (lambda xi, eta: np.ones_like(xi), 4.0 * rs),
                (lambda xi, eta: xi, 4.0 / 3.0 * a * rs),
                (lambda xi, eta: eta, 4.0 / 3.0 * b * rs),
                (lambda xi, eta: xi * eta, 4.0 / 3.0 * a * b * rs),
                (lambda xi, eta: xi ** 2, 4.0 / 3.0 * (1 + b ** 2) * rs),
                (lambda xi, eta: eta ** 2, 4.0 / 3.0 * (1 + a ** 2) * rs),
            ]
            for fn, exact in cases:
                value = integrate_cell(quad, _frame_integrand(frame, fn), 2)
                assert value == pytest.approx(exact, rel=1e-11, abs=1e-13)

    def test_unit_square_values(self, unit_square_vertices):
        frame = quad_frame(unit_square_vertices)
        assert integrate_cell(unit_square_vertices, _frame_integrand(frame, lambda xi, eta: xi * eta), 2) == \
            pytest.approx(0.0, abs=1e-15)
        assert integrate_cell(unit_square_vertices, _frame_integrand(frame, lambda xi, eta: xi ** 2), 2) == \
            pytest.approx(1.0 / 3.0)

    def test_split_diagonal_invariance(self, random_convex_quads):
        f = lambda x: x[:, 0] ** 5 * x[:, 1] ** 2 - 3.0 * x[:, 1] ** 7 + x[:, 0]
        for quad in random_convex_quads:
            first = cell_rule(quad, 7, diagonal=0).integrate(f)
            second = cell_rule(quad, 7, diagonal=1).integrate(f)
            assert first == pytest.approx(second, rel=1e-13, abs=1e-13)

    def test_vector_integrand(self, unit_square_vertices):
        value = integrate_cell(unit_square_vertices, lambda x: x, 1)
        np.testing.assert_allclose(value, [0.5, 0.5])

    def test_unsupported_degree(self, unit_square_vertices):
        with pytest.raises(UnsupportedDegree):
            integrate_cell(unit_square_vertices, lambda x: x[:, 0], 21)
        with pytest.raises(UnsupportedDegree):
            edge_rule([0, 0], [1, 0], -1)


class TestEdgeQuadrature:
    @staticmethod
    def _simpson_average(frame, fn, p0, p1):
        # Exact for cubics along a segment
        mid = 0.5 * (p0 + p1)
        values = [fn(*xi_eta(frame, p[None, :]))[0] for p in (p0, mid, p1)]
        return float((values[0] + 4.0 * values[1] + values[2]) / 6.0)

    def test_boundary_averages_match_simpson(self, random_convex_quads):
        functions = [
            lambda xi, eta: xi, lambda xi, eta: eta, lambda xi, eta: xi ** 2,
            lambda xi, eta: eta ** 2, lambda xi, eta: xi * eta, lambda xi, eta: xi ** 3,
            lambda xi, eta: eta ** 3, lambda xi, eta: xi ** 2 * eta,
        ]
        for quad in random_convex_quads:
            frame = quad_frame(quad)
            for i in range(4):
                p0, p1 = quad[i], quad[(i + 1) % 4]
                length = np.linalg.norm(p1 - p0)
                for fn in functions:
                    average = integrate_edge(p0, p1, _frame_integrand(frame, fn), 3) / length
                    assert average == pytest.approx(self._simpson_average(frame, fn, p0, p1), rel=1e-11, abs=1e-12)

    def test_boundary_average_closed_forms(self, random_convex_quads):
        for quad in random_convex_quads:
            frame = quad_frame(quad)
            b = frame.beta
            e1 = (quad[0], quad[1])
            e3 = (quad[2], quad[3])
            e4 = (quad[3], quad[0])

            def average(edge, fn):
                length = np.linalg.norm(edge[1] - edge[0])
                return integrate_edge(edge[0], edge[1], _frame_integrand(frame, fn), 3) / length

            assert average(e1, lambda xi, eta: eta) == pytest.approx(-1.0)
            assert average(e3, lambda xi, eta: xi ** 2) == pytest.approx((1 + b) ** 2 / 3)
            assert average(e4, lambda xi, eta: xi ** 3) == pytest.approx(1 + b ** 2)

    def test_weights_sum_to_length(self):
        rule = edge_rule([0.0, 0.0], [3.0, 4.0], 9)
        assert rule.weights.sum() == pytest.approx(5.0)
        assert len(rule.weights) == 5

import numpy as np
import pytest

from core.errors import IllConditioned
from core.elements import quad_morley_basis, tri_morley_basis
from core.elements.base_element import dual_coefficients
from core.elements.functionals import VertexValue
from core.elements.local_basis import P2
from core.elements.morley import QuadMorleyElement, TriMorleyElement
from core.mesh.geometry import quad_frame, triangle_chart


def _interpolate(basis, f, grad):
    """Apply the element DOFs to a smooth function and rebuild it in the basis."""
    dofs = np.array([fn.evaluate(f, grad) for fn in basis.functionals])
    return lambda points: basis.values(points) @ dofs


class TestQuadMorley:
    def test_dimension(self):
        assert QuadMorleyElement().dimension == 8

    def test_duality_on_random_quads(self, random_convex_quads):
        for quad in random_convex_quads:
            basis = quad_morley_basis(quad_frame(quad))
            np.testing.assert_allclose(basis.dof_matrix(), np.eye(8), atol=1e-10)

    def test_vertex_functions_on_unit_square(self, unit_square_vertices):
        basis = quad_morley_basis(quad_frame(unit_square_vertices))
        values = basis.values(unit_square_vertices)
        np.testing.assert_allclose(values[:, :4], np.eye(4), atol=1e-12)
        np.testing.assert_allclose(basis.dof_matrix()[4:, :4], 0.0, atol=1e-12)

    def test_reproduces_xi_eta(self, random_convex_quads, rng):
        for quad in random_convex_quads[:20]:
            frame = quad_frame(quad)
            chart = frame.chart()
            g = chart.inverse

            def f(points):
                uv = chart.to_local(points)
                return uv[:, 0] * uv[:, 1]

            def grad(points):
                uv = chart.to_local(points)
                return uv[:, 1:2] * g[0] + uv[:, 0:1] * g[1]

            basis = quad_morley_basis(frame)
            interpolant = _interpolate(basis, f, grad)
            points = chart.to_physical(rng.uniform(-0.5, 0.5, (10, 2)))
            np.testing.assert_allclose(interpolant(points), f(points), atol=1e-11)

    def test_reproduces_cubic(self, unit_square_vertices, rng):
        frame = quad_frame(unit_square_vertices)
        chart = frame.chart()
        g = chart.inverse

        def f(points):
            return chart.to_local(points)[:, 0] ** 3

        def grad(points):
            return 3.0 * chart.to_local(points)[:, 0:1] ** 2 * g[0]

        basis = quad_morley_basis(frame)
        points = rng.uniform(0.0, 1.0, (10, 2))
        np.testing.assert_allclose(_interpolate(basis, f, grad)(points), f(points), atol=1e-11)

    def test_hessian_matches_finite_differences(self, random_convex_quads):
        quad = random_convex_quads[3]
        basis = quad_morley_basis(quad_frame(quad))
        p = quad.mean(axis=0)[None, :]
        step = 1e-4
        hessians = basis.hessians(p)[0]
        for k in range(2):
            e = np.zeros(2)
            e[k] = step
            fd = (basis.gradients(p + e) - basis.gradients(p - e))[0] / (2 * step)
            np.testing.assert_allclose(fd, hessians[:, :, k], rtol=1e-6, atol=1e-6)


class TestTriMorley:
    def test_dimension(self):
        assert TriMorleyElement().dimension == 6

    def test_duality_on_random_triangles(self, random_triangles):
        for tri in random_triangles:
            np.testing.assert_allclose(tri_morley_basis(tri).dof_matrix(), np.eye(6), atol=1e-10)

    def test_vertex_function_vanishes_at_other_vertices(self, reference_triangle):
        basis = tri_morley_basis(reference_triangle)
        np.testing.assert_allclose(basis.values(reference_triangle)[:, :3], np.eye(3), atol=1e-13)

    def test_reproduces_x_squared(self, random_triangles, rng):
        for tri in random_triangles[:20]:
            basis = tri_morley_basis(tri)
            f = lambda p: p[:, 0] ** 2
            grad = lambda p: np.column_stack((2.0 * p[:, 0], np.zeros(len(p))))
            weights = rng.dirichlet(np.ones(3), size=10)
            points = weights @ tri
            np.testing.assert_allclose(_interpolate(basis, f, grad)(points), f(points), atol=1e-12)


class TestConditioning:
    def test_non_unisolvent_dofs_raise(self, reference_triangle):
        # Three copies of the same vertex value cannot determine P2
        chart = triangle_chart(reference_triangle)
        functionals = [VertexValue(reference_triangle[0])] * 6
        with pytest.raises(IllConditioned):
            dual_coefficients(functionals, P2, chart)

import numpy as np
import pytest

from core.elements.quadrature import cell_rule
from core.mesh import Mesh, generate_mixed, generate_structured_quads
from core.spaces import (
    FeFunction, Field, build_dofmap, curl_of, interpolate_morley, interpolate_qltz_scalar,
    interpolate_qltz_vector, l2_project_pressure
)


def _random_points(mesh, k, rng, count=20):
    # Convex combinations of the vertices stay strictly inside
    weights = rng.dirichlet(np.ones(mesh.cells[k].n_vertices), size=count)
    return weights @ mesh.cell_points(k)


def _bubble_psi():
    g = lambda t: t ** 2 * (1 - t) ** 2
    dg = lambda t: 2 * t - 6 * t ** 2 + 4 * t ** 3
    d2g = lambda t: 2 - 12 * t + 12 * t ** 2
    value = lambda p: g(p[:, 0]) * g(p[:, 1])
    gradient = lambda p: np.column_stack((dg(p[:, 0]) * g(p[:, 1]), g(p[:, 0]) * dg(p[:, 1])))

    def hessian(p):
        x, y = p[:, 0], p[:, 1]
        return np.stack((
            np.column_stack((d2g(x) * g(y), dg(x) * dg(y))),
            np.column_stack((dg(x) * dg(y), g(x) * d2g(y))),
        ), axis=1)

    return Field(value, gradient, hessian)


@pytest.fixture
def trapezoid_mesh(trapezoid_vertices):
    return Mesh(trapezoid_vertices, [(0, 1, 2, 3)])


class TestScalarQltz:
    def test_reproduces_local_space(self, trapezoid_mesh, rng):
        chart = trapezoid_mesh.cells[0].chart

        def w(points):
            uv = chart.to_local(points)
            xi, eta = uv[:, 0], uv[:, 1]
            return 1.0 + 2.0 * xi - eta + 0.5 * xi ** 2 - 0.3 * eta ** 2

        dofmap = build_dofmap(trapezoid_mesh, 'qltz')
        interpolant = interpolate_qltz_scalar(trapezoid_mesh, dofmap, w)
        points = _random_points(trapezoid_mesh, 0, rng)
        np.testing.assert_allclose(interpolant.values(0, points), w(points), atol=1e-12)

    def test_constant_one(self, square_mesh_2):
        dofmap = build_dofmap(square_mesh_2, 'qltz')
        interpolant = interpolate_qltz_scalar(square_mesh_2, dofmap, lambda p: np.ones(len(p)))
        np.testing.assert_allclose(interpolant.coefficients, 1.0)

    def test_projection_on_mixed_mesh(self, checkerboard_mesh_4, rng):
        dofmap = build_dofmap(checkerboard_mesh_4, 'qltz')
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        again = interpolate_qltz_scalar(checkerboard_mesh_4, dofmap, f)
        np.testing.assert_allclose(again.coefficients, f.coefficients, atol=1e-11)

    def test_edge_average_continuity(self, checkerboard_mesh_4, rng):
        mesh = checkerboard_mesh_4
        dofmap = build_dofmap(mesh, 'qltz')
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        from core.elements.quadrature import edge_rule
        for edge in mesh.edges:
            if edge.boundary:
                continue
            rule = edge_rule(*mesh.vertices[list(edge.vertices)], 4)
            averages = [rule.weights @ f.values(k, rule.points) / edge.length for k in edge.cells]
            assert averages[0] == pytest.approx(averages[1], abs=1e-11)


class TestVectorQltz:
    def test_projection_on_perturbed_quads(self, perturbed_mesh_4, rng):
        dofmap = build_dofmap(perturbed_mesh_4, 'qltz', components=2)
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        again = interpolate_qltz_vector(perturbed_mesh_4, dofmap, f)
        np.testing.assert_allclose(again.coefficients, f.coefficients, atol=1e-11)

    def test_projection_on_mixed_mesh(self, checkerboard_mesh_4, rng):
        dofmap = build_dofmap(checkerboard_mesh_4, 'qltz', components=2)
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        again = interpolate_qltz_vector(checkerboard_mesh_4, dofmap, f)
        np.testing.assert_allclose(again.coefficients, f.coefficients, atol=1e-11)

    def test_curl_field_has_no_divergence_moments(self):
        mesh = generate_structured_quads(4)
        dofmap = build_dofmap(mesh, 'qltz0', components=2)
        interpolant = interpolate_qltz_vector(mesh, dofmap, curl_of(_bubble_psi()))
        for k, cell in enumerate(mesh.cells):
            rule = cell_rule(mesh.cell_points(k), 2)
            uv = cell.chart.to_local(rule.points)
            div = interpolant.divergences(k, rule.points)
            for q in (np.ones(len(uv)), uv[:, 0], uv[:, 1]):
                assert abs(rule.weights @ (div * q)) <= 1e-12

    def test_moments_of_x_field(self, perturbed_mesh_4):
        mesh = perturbed_mesh_4
        dofmap = build_dofmap(mesh, 'qltz', components=2)
        interpolant = interpolate_qltz_vector(mesh, dofmap, lambda p: np.column_stack((p[:, 0], np.zeros(len(p)))))
        for k, cell in enumerate(mesh.cells):
            rule = cell_rule(mesh.cell_points(k), 2)
            uv = cell.chart.to_local(rule.points)
            div = interpolant.divergences(k, rule.points)
            for q in (np.ones(len(uv)), uv[:, 0], uv[:, 1]):
                assert rule.weights @ (div * q) == pytest.approx(rule.weights @ q, abs=1e-12)


class TestMorleyInterpolation:
    def test_bubble_has_vanishing_boundary_dofs(self):
        mesh = generate_structured_quads(4)
        dofmap = build_dofmap(mesh, 'morley')
        interpolant = interpolate_morley(mesh, dofmap, _bubble_psi())
        boundary_edges = dofmap.edge_dofs[mesh.boundary_edge_mask]
        boundary_vertices = dofmap.vertex_dofs[mesh.boundary_vertex_mask]
        np.testing.assert_allclose(interpolant.coefficients[boundary_edges], 0.0, atol=1e-14)
        np.testing.assert_allclose(interpolant.coefficients[boundary_vertices], 0.0, atol=1e-14)

    def test_reproduces_xi_cubed(self, trapezoid_mesh, rng):
        chart = trapezoid_mesh.cells[0].chart
        g = chart.inverse
        phi = lambda p: chart.to_local(p)[:, 0] ** 3
        grad = lambda p: 3.0 * chart.to_local(p)[:, 0:1] ** 2 * g[0]
        dofmap = build_dofmap(trapezoid_mesh, 'morley')
        interpolant = interpolate_morley(trapezoid_mesh, dofmap, phi, grad)
        points = _random_points(trapezoid_mesh, 0, rng)
        np.testing.assert_allclose(interpolant.values(0, points), phi(points), atol=1e-11)

    def test_projection_on_mixed_mesh(self, checkerboard_mesh_4, rng):
        dofmap = build_dofmap(checkerboard_mesh_4, 'morley')
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        again = interpolate_morley(checkerboard_mesh_4, dofmap, f)
        np.testing.assert_allclose(again.coefficients, f.coefficients, atol=1e-11)

    def test_weak_continuity(self, checkerboard_mesh_4, rng):
        from core.elements.quadrature import edge_rule
        mesh = checkerboard_mesh_4
        dofmap = build_dofmap(mesh, 'morley')
        f = FeFunction(dofmap, rng.standard_normal(dofmap.size))
        for edge in mesh.edges:
            if edge.boundary:
                continue
            ends = mesh.vertices[list(edge.vertices)]
            rule = edge_rule(*ends, 4)
            normal_averages = [rule.weights @ (f.gradients(k, rule.points) @ edge.normal) / edge.length
                               for k in edge.cells]
            assert normal_averages[0] == pytest.approx(normal_averages[1], abs=1e-11)
            for end in ends:
                values = [f.values(k, end[None, :])[0] for k in edge.cells]
                assert values[0] == pytest.approx(values[1], abs=1e-11)


class TestPressureProjection:
    def test_linear_reproduced_on_quads(self, perturbed_mesh_4):
        dofmap = build_dofmap(perturbed_mesh_4, 'pressure')
        q = lambda p: 2.0 * p[:, 0] - p[:, 1] + 0.5
        projected = l2_project_pressure(perturbed_mesh_4, dofmap, q)
        for k in range(perturbed_mesh_4.n_cells):
            points = perturbed_mesh_4.cell_points(k).mean(axis=0)[None, :]
            assert projected.values(k, points)[0] == pytest.approx(q(points)[0])

    def test_centroid_values_on_triangles(self):
        mesh = generate_mixed(3, 'all')
        dofmap = build_dofmap(mesh, 'pressure')
        projected = l2_project_pressure(mesh, dofmap, lambda p: p[:, 0])
        for k in range(mesh.n_cells):
            assert projected.coefficients[k] == pytest.approx(mesh.cell_points(k)[:, 0].mean())

    def test_residual_is_orthogonal(self, checkerboard_mesh_4):
        mesh = checkerboard_mesh_4
        dofmap = build_dofmap(mesh, 'pressure')
        q = lambda p: np.sin(3 * p[:, 0]) * np.exp(p[:, 1])
        projected = l2_project_pressure(mesh, dofmap, q)
        for k in range(mesh.n_cells):
            rule = cell_rule(mesh.cell_points(k))
            residual = q(rule.points) - projected.values(k, rule.points)
            local = dofmap.local_basis(k).values(rule.points)
            np.testing.assert_allclose(local.T @ (rule.weights * residual), 0.0, atol=1e-11)

    def test_zero_mean(self, checkerboard_mesh_4):
        dofmap = build_dofmap(checkerboard_mesh_4, 'pressure0')
        projected = l2_project_pressure(checkerboard_mesh_4, dofmap, lambda p: p[:, 0] + p[:, 1])
        total = 0.0
        for k in range(checkerboard_mesh_4.n_cells):
            rule = cell_rule(checkerboard_mesh_4.cell_points(k), 2)
            total += rule.weights @ projected.values(k, rule.points)
        assert total == pytest.approx(0.0, abs=1e-13)

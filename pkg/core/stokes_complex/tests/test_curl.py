import numpy as np
import pytest

from core.assembly import assemble_div
from core.errors import IncompatibleMesh
from core.mesh import generate_structured_quads
from core.spaces import FeFunction, build_dofmap, interpolate_morley
from core.spaces.fields import Field
from core.stokes_complex import curl_matrix, curl_morley


def random_points(mesh, k, rng, count=20):
    weights = rng.dirichlet(np.ones(mesh.cells[k].n_vertices), count)
    return weights @ mesh.cell_points(k)


class TestCurlMorley:
    def test_sign_convention(self, single_quad_mesh):
        mesh = single_quad_mesh
        M = build_dofmap(mesh, 'morley')
        V = build_dofmap(mesh, 'qltz', components=2)
        xy = Field(lambda p: p[:, 0] * p[:, 1], lambda p: np.column_stack((p[:, 1], p[:, 0])))
        u = curl_morley(mesh, M, V, interpolate_morley(mesh, M, xy, xy.gradient))
        points = np.array([[0.25, 0.5], [0.75, 0.1], [0.5, 0.9]])
        # curl(xy) = (d_y, -d_x) xy = (x, -y)
        np.testing.assert_allclose(u.values(0, points), np.column_stack((points[:, 0], -points[:, 1])),
                                   atol=1e-12)

    @pytest.mark.parametrize('mesh_name', ['perturbed_mesh_4', 'checkerboard_mesh_4'])
    def test_matches_local_curl(self, mesh_name, request, rng):
        mesh = request.getfixturevalue(mesh_name)
        M = build_dofmap(mesh, 'morley')
        V = build_dofmap(mesh, 'qltz', components=2)
        g = FeFunction(M, rng.standard_normal(M.size))
        u = curl_morley(mesh, M, V, g)
        for k in range(mesh.n_cells):
            points = random_points(mesh, k, rng)
            expected = g.curls(k, points)
            np.testing.assert_allclose(u.values(k, points), expected, atol=1e-11 * max(1.0, abs(expected).max()))

    def test_linear_function(self, perturbed_mesh_4):
        mesh = perturbed_mesh_4
        M = build_dofmap(mesh, 'morley')
        V = build_dofmap(mesh, 'qltz', components=2)
        linear = Field(lambda p: 2.0 * p[:, 0] - 3.0 * p[:, 1] + 1.0,
                       lambda p: np.tile([2.0, -3.0], (len(p), 1)))
        u = curl_morley(mesh, M, V, interpolate_morley(mesh, M, linear, linear.gradient))
        np.testing.assert_allclose(u.coefficients[:V.n_dofs], -3.0, atol=1e-12)
        np.testing.assert_allclose(u.coefficients[V.n_dofs:], -2.0, atol=1e-12)

    @pytest.mark.parametrize('mesh_name', ['square_mesh_4', 'perturbed_mesh_4', 'checkerboard_mesh_4'])
    def test_divergence_free(self, mesh_name, request, rng):
        mesh = request.getfixturevalue(mesh_name)
        M = build_dofmap(mesh, 'morley0')
        V = build_dofmap(mesh, 'qltz0', components=2)
        B = assemble_div(mesh, V, build_dofmap(mesh, 'pressure0'))
        for _ in range(20):
            u = curl_morley(mesh, M, V, FeFunction(M, rng.standard_normal(M.size)))
            assert np.abs(B @ u.coefficients).max() <= 1e-11 * max(1.0, np.abs(u.coefficients).max())

    def test_matrix_shape(self, checkerboard_mesh_2):
        M = build_dofmap(checkerboard_mesh_2, 'morley0')
        V = build_dofmap(checkerboard_mesh_2, 'qltz0', components=2)
        assert curl_matrix(checkerboard_mesh_2, M, V).shape == (16, 7)

    def test_foreign_mesh(self, square_mesh_2):
        other = generate_structured_quads(2)
        M = build_dofmap(other, 'morley0')
        V = build_dofmap(square_mesh_2, 'qltz0', components=2)
        with pytest.raises(IncompatibleMesh):
            curl_morley(square_mesh_2, M, V, FeFunction(M))

    def test_constrained_velocity_needs_constrained_stream(self, square_mesh_2):
        M = build_dofmap(square_mesh_2, 'morley')
        V = build_dofmap(square_mesh_2, 'qltz0', components=2)
        with pytest.raises(ValueError):
            curl_matrix(square_mesh_2, M, V)

import numpy as np
import pytest
import scipy.io

from core.assembly import (
    SparseSystem, assemble_div, assemble_hessian, assemble_load, assemble_pressure_mass,
    assemble_pressure_mean, assemble_rot, assemble_stiffness
)
from core.errors import IncompatibleMesh
from core.mesh import Mesh, generate_mixed, generate_structured_quads
from core.mesh.geometry import quad_frame
from core.spaces import build_dofmap, interpolate_morley, interpolate_qltz_vector


class TestStiffness:
    def test_constants_in_kernel(self, checkerboard_mesh_4):
        V = build_dofmap(checkerboard_mesh_4, 'qltz')
        A = assemble_stiffness(checkerboard_mesh_4, V)
        np.testing.assert_allclose(A @ np.ones(V.size), 0.0, atol=1e-12)

    def test_positive_definite_on_constrained_space(self, square_mesh_4):
        A = assemble_stiffness(square_mesh_4, build_dofmap(square_mesh_4, 'qltz0'))
        assert np.linalg.eigvalsh(A.toarray()).min() > 0

    def test_symmetric(self, perturbed_mesh_4):
        A = assemble_stiffness(perturbed_mesh_4, build_dofmap(perturbed_mesh_4, 'qltz0', components=2))
        assert SparseSystem(A).is_symmetric()

    def test_empty_for_single_triangle(self, reference_triangle):
        mesh = Mesh(reference_triangle, [(0, 1, 2)])
        A = assemble_stiffness(mesh, build_dofmap(mesh, 'qltz0'))
        assert A.shape == (0, 0)

    def test_viscosity_scales(self, square_mesh_2):
        V = build_dofmap(square_mesh_2, 'qltz0')
        np.testing.assert_allclose(assemble_stiffness(square_mesh_2, V, 2.5).toarray(),
                                   2.5 * assemble_stiffness(square_mesh_2, V).toarray())

    def test_deterministic(self, perturbed_mesh_4):
        V = build_dofmap(perturbed_mesh_4, 'qltz0')
        first = assemble_stiffness(perturbed_mesh_4, V)
        second = assemble_stiffness(perturbed_mesh_4, V)
        np.testing.assert_array_equal(first.data, second.data)
        np.testing.assert_array_equal(first.indices, second.indices)

    def test_foreign_dofmap(self, square_mesh_2):
        other = generate_structured_quads(2)
        with pytest.raises(IncompatibleMesh):
            assemble_stiffness(square_mesh_2, build_dofmap(other, 'qltz0'))


class TestDivergence:
    def test_rank_on_two_by_two(self, square_mesh_2):
        B = assemble_div(square_mesh_2, build_dofmap(square_mesh_2, 'qltz0', components=2),
                         build_dofmap(square_mesh_2, 'pressure0'))
        assert B.shape == (12, 16)
        assert np.linalg.matrix_rank(B.toarray()) == 11

    def test_moments_of_x_field(self, perturbed_mesh_4):
        mesh = perturbed_mesh_4
        V = build_dofmap(mesh, 'qltz', components=2)
        W = build_dofmap(mesh, 'pressure')
        w = interpolate_qltz_vector(mesh, V, lambda p: np.column_stack((p[:, 0], np.zeros(len(p)))))
        moments = assemble_div(mesh, V, W) @ w.coefficients
        for k, cell in enumerate(mesh.cells):
            frame = cell.frame
            xi_row = W.cell_dofs[k][1]
            assert moments[xi_row] == pytest.approx(4.0 / 3.0 * frame.alpha * frame.cross, abs=1e-12)
            assert moments[W.cell_dofs[k][0]] == pytest.approx(4.0 * frame.cross)

    def test_rot_of_rotated_field(self, checkerboard_mesh_2):
        mesh = checkerboard_mesh_2
        V = build_dofmap(mesh, 'qltz', components=2)
        W = build_dofmap(mesh, 'pressure')
        # v = (-y, x) has rot 2 and div 0
        v = interpolate_qltz_vector(mesh, V, lambda p: np.column_stack((-p[:, 1], p[:, 0])))
        np.testing.assert_allclose(assemble_rot(mesh, V, W) @ v.coefficients,
                                   2.0 * assemble_pressure_mean(mesh, W), atol=1e-12)
        np.testing.assert_allclose(assemble_div(mesh, V, W) @ v.coefficients, 0.0, atol=1e-12)


class TestHessian:
    def test_linear_functions_in_kernel(self, checkerboard_mesh_4):
        mesh = checkerboard_mesh_4
        M = build_dofmap(mesh, 'morley')
        K = assemble_hessian(mesh, M)
        linear = interpolate_morley(mesh, M, lambda p: 1.0 + 2.0 * p[:, 0] - 3.0 * p[:, 1],
                                    lambda p: np.tile([2.0, -3.0], (len(p), 1)))
        np.testing.assert_allclose(K @ linear.coefficients, 0.0, atol=1e-10)

    def test_symmetric_and_positive(self, square_mesh_4):
        K = assemble_hessian(square_mesh_4, build_dofmap(square_mesh_4, 'morley0'))
        dense = K.toarray()
        assert np.abs(dense - dense.T).max() <= 1e-12 * np.abs(dense).max()
        assert np.linalg.eigvalsh(dense).min() > 0

    def test_empty_on_single_cell(self, single_quad_mesh):
        assert assemble_hessian(single_quad_mesh, build_dofmap(single_quad_mesh, 'morley0')).shape == (0, 0)


class TestLoadAndMass:
    def test_zero_forcing(self, square_mesh_2):
        V = build_dofmap(square_mesh_2, 'qltz0', components=2)
        np.testing.assert_array_equal(assemble_load(square_mesh_2, V, lambda p: np.zeros((len(p), 2))), 0.0)

    def test_bubble_integral(self, trapezoid_vertices):
        mesh = Mesh(trapezoid_vertices, [(0, 1, 2, 3)])
        V = build_dofmap(mesh, 'qltz0')
        load = assemble_load(mesh, V, lambda p: np.ones(len(p)))
        assert load[0] == pytest.approx(4.0 * quad_frame(trapezoid_vertices).cross)

    def test_pressure_mass_on_unit_square(self, single_quad_mesh):
        W = build_dofmap(single_quad_mesh, 'pressure')
        np.testing.assert_allclose(assemble_pressure_mass(single_quad_mesh, W).toarray(),
                                   np.diag([1.0, 1.0 / 3.0, 1.0 / 3.0]), atol=1e-14)

    def test_mean_row_sums_to_area(self, checkerboard_mesh_4):
        W = build_dofmap(checkerboard_mesh_4, 'pressure')
        mean = assemble_pressure_mean(checkerboard_mesh_4, W)
        constant = np.zeros(W.size)
        for dofs in W.cell_dofs:
            constant[dofs[0]] = 1.0
        assert mean @ constant == pytest.approx(1.0)


class TestMatrixMarket:
    def test_export(self, square_mesh_2, temp_dir):
        A = assemble_stiffness(square_mesh_2, build_dofmap(square_mesh_2, 'qltz0'))
        path = temp_dir / "stiffness.mtx"
        SparseSystem(A).to_matrix_market(path)
        again = scipy.io.mmread(str(path))
        np.testing.assert_allclose(again.toarray(), A.toarray())

    def test_export_with_vectors(self, square_mesh_2, temp_dir):
        W = build_dofmap(square_mesh_2, 'pressure')
        M = assemble_pressure_mass(square_mesh_2, W)
        mean = assemble_pressure_mean(square_mesh_2, W)
        rhs = np.arange(W.size, dtype=float)
        written = SparseSystem(M, rhs=rhs, constraint=mean).to_matrix_market(temp_dir / "mass.mtx")
        assert [path.name for path in written] == ["mass.mtx", "mass_rhs.mtx", "mass_constraint.mtx"]
        np.testing.assert_allclose(np.ravel(scipy.io.mmread(str(written[1]))), rhs)
        np.testing.assert_allclose(np.ravel(scipy.io.mmread(str(written[2]))), mean)

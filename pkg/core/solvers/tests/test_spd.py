import numpy as np
import pytest
import scipy.sparse as sp

from core.assembly import assemble_hessian, assemble_load, assemble_stiffness
from core.errors import NoConvergence, NotPositiveDefinite
from core.solvers import relative_residual, solve_spd
from core.spaces import build_dofmap


@pytest.fixture
def poisson_system(square_mesh_4):
    V = build_dofmap(square_mesh_4, 'qltz0')
    A = assemble_stiffness(square_mesh_4, V)
    b = assemble_load(square_mesh_4, V, lambda p: np.ones(len(p)))
    return A, b


class TestSolveSpd:
    def test_zero_rhs(self, poisson_system):
        A, b = poisson_system
        report = solve_spd(A, np.zeros_like(b))
        assert report.method == 'trivial'
        np.testing.assert_array_equal(report.solution, 0.0)

    def test_residual(self, poisson_system):
        A, b = poisson_system
        report = solve_spd(A, b)
        assert report.method == 'splu'
        assert report.residual <= 1e-10
        assert relative_residual(A, report.solution, b) <= 1e-10

    def test_deterministic(self, poisson_system):
        A, b = poisson_system
        np.testing.assert_array_equal(solve_spd(A, b).solution, solve_spd(A, b).solution)

    def test_biharmonic_inverse_consistency(self, square_mesh_4, rng):
        M = build_dofmap(square_mesh_4, 'morley0')
        K = assemble_hessian(square_mesh_4, M)
        g = rng.standard_normal(M.size)
        report = solve_spd(K, K @ g)
        np.testing.assert_allclose(report.solution, g, rtol=0, atol=1e-9 * np.abs(g).max())

    def test_cg_fallback(self, poisson_system, mocker):
        A, b = poisson_system
        mocker.patch('core.config.FemConfig.direct_solver_max_dofs',
                     new_callable=mocker.PropertyMock, return_value=0)
        report = solve_spd(A, b)
        assert report.method == 'cg'
        assert report.residual <= 1e-10
        np.testing.assert_allclose(report.solution, solve_spd(A, b, tol=1e-12).solution, atol=1e-8)

    def test_indefinite(self):
        A = sp.diags([1.0, -1.0, 2.0]).tocsr()
        with pytest.raises(NotPositiveDefinite):
            solve_spd(A, np.ones(3))

    def test_iteration_budget(self, poisson_system, mocker):
        A, b = poisson_system
        mocker.patch('core.config.FemConfig.direct_solver_max_dofs',
                     new_callable=mocker.PropertyMock, return_value=0)
        mocker.patch('core.solvers.spd.cg', return_value=(np.zeros_like(b), 5))
        with pytest.raises(NoConvergence):
            solve_spd(A, b)

    def test_report_dict(self, poisson_system):
        A, b = poisson_system
        summary = solve_spd(A, b).to_dict()
        assert summary['method'] == 'splu'
        assert summary['size'] == len(b)
        assert 'nnz_factor' in summary['stats']

from pathlib import Path

from core import logger
from core.assembly import (
    Norm, SparseSystem, assemble_div, assemble_hessian, assemble_load, assemble_pressure_mean,
    assemble_stiffness, divergence_norm, error_norm
)
from core.config import FemConfig
from core.mesh.mesh import Mesh
from core.solvers import solve_spd, solve_stokes
from core.spaces import FeFunction, build_dofmap
from .base_problem import BaseProblem, LevelSolution
from .manufactured import ManufacturedSolution, biharmonic_solution, poisson_solution, stokes_solution

# ||div_h u_h|| relative to |u_h|_{1,h}
DIVERGENCE_FREE_TOLERANCE = 1e-8


def _solve_spd_system(system: SparseSystem, export_path: Path = None):
    if export_path is not None:
        system.to_matrix_market(export_path)
    return solve_spd(system.matrix, system.rhs)


class PoissonProblem(BaseProblem):
    norms = ('l2', 'h1')

    def __init__(self):
        super().__init__(self.get_id(), "-Laplace u = f with QLTZ / P1nc elements")

    @staticmethod
    def get_id() -> str:
        return "poisson"

    @staticmethod
    def get_name() -> str:
        return "Poisson"

    def manufactured(self) -> ManufacturedSolution:
        return poisson_solution()

    def solve(self, mesh: Mesh, export_path: Path = None) -> LevelSolution:
        exact = self.manufactured()
        V = build_dofmap(mesh, 'qltz0')
        report = _solve_spd_system(SparseSystem(assemble_stiffness(mesh, V), assemble_load(mesh, V, exact.forcing)),
                                   export_path)
        u_h = FeFunction(V, report.solution)
        return LevelSolution(V.dim, None, {
            'l2': error_norm(exact.solution, u_h, Norm.L2),
            'h1': error_norm(exact.solution, u_h, Norm.H1_BROKEN)
        })


class StokesProblem(BaseProblem):
    norms = ('l2', 'h1', 'p_l2')

    def __init__(self, viscosity: float = None):
        super().__init__(self.get_id(), "Stokes with QLTZ velocities and discontinuous P1 pressures")
        self.viscosity = FemConfig().viscosity if viscosity is None else viscosity

    @staticmethod
    def get_id() -> str:
        return "stokes"

    @staticmethod
    def get_name() -> str:
        return "Stokes"

    def manufactured(self) -> ManufacturedSolution:
        return stokes_solution(self.viscosity)

    def solve(self, mesh: Mesh, export_path: Path = None) -> LevelSolution:
        exact = self.manufactured()
        V = build_dofmap(mesh, 'qltz0', components=2)
        W = build_dofmap(mesh, 'pressure')
        u_h, p_h, _ = solve_stokes(
            assemble_stiffness(mesh, V, self.viscosity),
            assemble_div(mesh, V, W),
            assemble_pressure_mean(mesh, W),
            assemble_load(mesh, V, exact.forcing),
            velocity_space=V,
            pressure_space=W,
            export_path=export_path
        )

        seminorm = error_norm(None, u_h, Norm.H1_BROKEN)
        divergence = divergence_norm(u_h)
        logger.assert_true(divergence <= DIVERGENCE_FREE_TOLERANCE * seminorm,
                           f"discrete velocity is not divergence free: {divergence:.3e} vs |u_h|_1 {seminorm:.3e}")

        return LevelSolution(V.dim, W.dim - 1, {
            'l2': error_norm(exact.solution, u_h, Norm.L2),
            'h1': error_norm(exact.solution, u_h, Norm.H1_BROKEN),
            'p_l2': error_norm(exact.pressure, p_h, Norm.L2)
        })


class BiharmonicProblem(BaseProblem):
    norms = ('l2', 'h1', 'h2')

    def __init__(self):
        super().__init__(self.get_id(), "Clamped plate with quadrilateral and triangular Morley elements")

    @staticmethod
    def get_id() -> str:
        return "biharmonic"

    @staticmethod
    def get_name() -> str:
        return "Biharmonic"

    def manufactured(self) -> ManufacturedSolution:
        return biharmonic_solution()

    def solve(self, mesh: Mesh, export_path: Path = None) -> LevelSolution:
        exact = self.manufactured()
        M = build_dofmap(mesh, 'morley0')
        report = _solve_spd_system(SparseSystem(assemble_hessian(mesh, M), assemble_load(mesh, M, exact.forcing)),
                                   export_path)
        phi_h = FeFunction(M, report.solution)
        return LevelSolution(M.dim, None, {
            'l2': error_norm(exact.solution, phi_h, Norm.L2),
            'h1': error_norm(exact.solution, phi_h, Norm.H1_BROKEN),
            'h2': error_norm(exact.solution, phi_h, Norm.H2_BROKEN)
        })

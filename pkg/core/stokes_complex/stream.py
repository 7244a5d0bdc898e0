"""
Stream-function route to the discrete Stokes velocity: solve the Morley
plate problem with the load (f, curl_h psi) and take curl_h of the result.
"""

import numpy as np

from core import logger
from core.assembly import (
    assemble_curl_load, assemble_div, assemble_hessian, assemble_load, assemble_pressure_mean, assemble_stiffness
)
from core.config import FemConfig
from core.mesh.mesh import Mesh
from core.result import CheckResult
from core.solvers import solve_spd, solve_stokes
from core.spaces.dofmap import build_dofmap
from core.spaces.fe_function import FeFunction
from .base_check import BaseCheck
from .check_id import CheckId
from .context import ComplexContext
from .curl import curl_morley

STREAM_TOLERANCE = 1e-8


def default_forcing(points: np.ndarray) -> np.ndarray:
    x, y = points[:, 0], points[:, 1]
    return np.column_stack((y ** 2 + 1.0, x * y))


def solve_stream_function(mesh: Mesh, f, viscosity: float = None, degree: int = None) -> tuple[FeFunction, FeFunction]:
    """Returns (phi_h, u_h) with u_h = curl_h phi_h in the constrained vector QLTZ space."""
    viscosity = FemConfig().viscosity if viscosity is None else viscosity
    M = build_dofmap(mesh, 'morley0')
    V = build_dofmap(mesh, 'qltz0', components=2)
    K = assemble_hessian(mesh, M, scale=viscosity)
    load = assemble_curl_load(mesh, M, f, degree)
    report = solve_spd(K, load)
    phi_h = FeFunction(M, report.solution)
    logger.debug(f"stream function solved: {report}")
    return phi_h, curl_morley(mesh, M, V, phi_h)


class StreamFunctionCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.STREAM_FUNCTION

    @staticmethod
    def get_name() -> str:
        return "Stokes velocity equals curl_h of the discrete stream function"

    def run(self, context: ComplexContext) -> CheckResult:
        mesh = context.mesh
        f = context.forcing or default_forcing
        if context.M.dim == 0:
            return self.result(True, "M_h0 is trivial", 0.0)

        _, u_stream = solve_stream_function(mesh, f, viscosity=1.0)
        V = u_stream.dofmap
        W = build_dofmap(mesh, 'pressure')
        u_stokes, _, _ = solve_stokes(assemble_stiffness(mesh, V), assemble_div(mesh, V, W),
                                      assemble_pressure_mean(mesh, W), assemble_load(mesh, V, f))

        scale = max(np.linalg.norm(u_stokes), np.finfo(float).tiny)
        difference = float(np.linalg.norm(u_stokes - u_stream.coefficients) / scale)
        context.defects['stream'] = difference
        return self.result(difference <= STREAM_TOLERANCE, f"relative difference {difference:.3e}", difference)

"""
The commuting diagram between the continuous and discrete complexes:
curl_h of the Morley interpolant equals the QLTZ interpolant of curl, and
div_h of the QLTZ interpolant equals the pressure projection of div.
"""

import numpy as np

from core.mesh.mesh import Mesh
from core.result import CheckResult
from core.spaces.dofmap import build_dofmap
from core.spaces.fe_function import FeFunction
from core.spaces.fields import Field, curl_of
from core.spaces.interpolation import interpolate_morley, interpolate_qltz_vector, l2_project_pressure
from .base_check import BaseCheck
from .check_id import CheckId
from .context import ComplexContext
from .curl import curl_morley

COMMUTING_TOLERANCE = 1e-10


class _BrokenDivergence:
    """div_h of a vector FeFunction as a cellwise target for projection."""

    def __init__(self, function: FeFunction):
        self.function = function

    def on_cell(self, k: int):
        return lambda points: self.function.divergences(k, points)


def curl_defect(mesh: Mesh, phi: Field, degree: int = None) -> float:
    M = build_dofmap(mesh, 'morley')
    V = build_dofmap(mesh, 'qltz', components=2)
    discrete = curl_morley(mesh, M, V, interpolate_morley(mesh, M, phi, phi.gradient, degree))
    interpolated = interpolate_qltz_vector(mesh, V, curl_of(phi), degree)
    return float(np.abs(discrete.coefficients - interpolated.coefficients).max(initial=0.0))


def div_defect(mesh: Mesh, v: Field, degree: int = None) -> float:
    V = build_dofmap(mesh, 'qltz', components=2)
    W = build_dofmap(mesh, 'pressure')
    w = interpolate_qltz_vector(mesh, V, v, degree)
    discrete = l2_project_pressure(mesh, W, _BrokenDivergence(w), degree)
    projected = l2_project_pressure(mesh, W, v.divergence, degree)
    return float(np.abs(discrete.coefficients - projected.coefficients).max(initial=0.0))


def check_commutativity(mesh: Mesh, phi: Field, v: Field, degree: int = None) -> tuple[float, float]:
    """
    Max-norm coefficient defects of both squares of the diagram. phi needs a
    gradient, v a divergence. Both use the unconstrained spaces.
    """
    if phi.gradient is None:
        raise ValueError("phi needs a gradient")
    if v.divergence is None:
        raise ValueError("v needs a divergence")
    return curl_defect(mesh, phi, degree), div_defect(mesh, v, degree)


class CommutingCurlCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.COMMUTING_CURL

    @staticmethod
    def get_name() -> str:
        return "curl_h of the Morley interpolant is the QLTZ interpolant of curl"

    def run(self, context: ComplexContext) -> CheckResult:
        if context.phi is None:
            return self.result(False, "no stream function supplied")
        defect = curl_defect(context.mesh, context.phi)
        context.defects['curl'] = defect
        return self.result(defect <= COMMUTING_TOLERANCE, f"max defect {defect:.3e}", defect)


class CommutingDivCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.COMMUTING_DIV

    @staticmethod
    def get_name() -> str:
        return "div_h of the QLTZ interpolant is the projection of div"

    def run(self, context: ComplexContext) -> CheckResult:
        if context.velocity is None:
            return self.result(False, "no velocity field supplied")
        defect = div_defect(context.mesh, context.velocity)
        context.defects['div'] = defect
        return self.result(defect <= COMMUTING_TOLERANCE, f"max defect {defect:.3e}", defect)

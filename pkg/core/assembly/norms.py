"""
Broken-norm errors against exact solutions, by cellwise over-integration.
"""

from enum import Enum

import numpy as np

from core.elements.quadrature import cell_rule
from core.spaces.fe_function import FeFunction
from core.spaces.fields import Field


class Norm(Enum):
    L2 = "l2"
    H1_BROKEN = "h1"
    H2_BROKEN = "h2"


def _zero(points):
    return 0.0


def _integrate_squared(u_h: FeFunction, exact, discrete, degree: int) -> float:
    total = 0.0
    mesh = u_h.mesh
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), degree)
        diff = np.asarray(exact(rule.points)) - discrete(k, rule.points)
        squared = diff.reshape(len(rule.points), -1) ** 2
        total += float(rule.weights @ squared.sum(axis=1))
    return total


def error_norm(u_exact: Field | None, u_h: FeFunction, norm: Norm = Norm.L2, degree: int = None) -> float:
    """
    ||u_exact - u_h|| in L2, or the broken H1 / H2 seminorm. Pass
    u_exact=None for the norm of u_h itself.
    """
    if isinstance(norm, str):
        norm = Norm(norm)

    if norm == Norm.L2:
        exact = u_exact.value if u_exact is not None else _zero
        discrete = u_h.values
    elif norm == Norm.H1_BROKEN:
        exact = u_exact.gradient if u_exact is not None else _zero
        discrete = u_h.gradients
    else:
        exact = u_exact.hessian if u_exact is not None else _zero
        discrete = u_h.hessians

    if exact is None:
        raise ValueError(f"exact solution lacks the derivatives needed for the {norm.value} norm")
    return float(np.sqrt(_integrate_squared(u_h, exact, discrete, degree)))


def divergence_norm(u_h: FeFunction, degree: int = None) -> float:
    """||div_h u_h||_L2."""
    return float(np.sqrt(_integrate_squared(u_h, _zero, u_h.divergences, degree)))

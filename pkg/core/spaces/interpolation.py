"""
Interpolation and projection onto the discrete spaces.

Targets are callables on (n, 2) point arrays. Anything exposing
`on_cell(k)` (an FeFunction, for instance) is restricted to each cell
first, so piecewise polynomials can be interpolated too.
"""

import numpy as np

from core import logger
from core.config import FemConfig
from core.elements.element_factory import ElementFactory
from core.elements.morley import morley_functionals
from core.elements.qltz import step2_matrix
from core.elements.quadrature import cell_rule, edge_rule
from core.elements.functionals import outward_normal
from core.mesh.mesh import CellKind, Mesh
from .dofmap import DofMap
from .fe_function import FeFunction


def _restrict(w, k: int):
    return w.on_cell(k) if hasattr(w, 'on_cell') else w


def _check_family(dofmap: DofMap, family: str, components: int = None):
    if dofmap.family != family:
        raise ValueError(f"expected a {family} space, got {dofmap.kind.value}")
    if components is not None and dofmap.components != components:
        raise ValueError(f"expected {components} component(s), got {dofmap.components}")


def _resolve(degree: int) -> int:
    return FemConfig().quadrature_degree if degree is None else degree


def _scatter(coefficients: np.ndarray, dofs: np.ndarray, local: np.ndarray):
    mask = dofs >= 0
    coefficients[dofs[mask]] = local[mask]


def _local_averages(mesh: Mesh, dofmap: DofMap, k: int, w, degree: int) -> np.ndarray:
    element = ElementFactory.for_cell(dofmap.family, mesh.cells[k].kind)
    wk = _restrict(w, k)
    return np.array([fn.evaluate(wk) for fn in element.functionals(mesh.cell_points(k), degree)])


def interpolate_qltz_scalar(mesh: Mesh, dofmap: DofMap, w, degree: int = None) -> FeFunction:
    """Edge and cell averages of w."""
    degree = _resolve(degree)
    _check_family(dofmap, 'qltz', 1)
    coefficients = np.zeros(dofmap.size)
    for k in range(mesh.n_cells):
        _scatter(coefficients, dofmap.cell_dofs[k], _local_averages(mesh, dofmap, k, w, degree))
    return FeFunction(dofmap, coefficients)


def _divergence_moments(mesh: Mesh, k: int, w, degree: int) -> np.ndarray:
    """int_Q div(w) q for q = eta, xi, by parts: boundary flux minus int_Q w . grad q."""
    cell = mesh.cells[k]
    chart = cell.chart
    grad_q = np.array([chart.inverse[1], chart.inverse[0]])
    points = mesh.cell_points(k)

    moments = np.zeros(2)
    for i in range(4):
        p0, p1 = points[i], points[(i + 1) % 4]
        rule = edge_rule(p0, p1, degree)
        flux = np.asarray(w(rule.points)) @ outward_normal(p0, p1)
        uv = chart.to_local(rule.points)
        q = np.column_stack((uv[:, 1], uv[:, 0]))
        moments += np.tensordot(rule.weights, flux[:, None] * q, axes=(0, 0))

    rule = cell_rule(points, degree)
    moments -= np.tensordot(rule.weights, np.asarray(w(rule.points)) @ grad_q.T, axes=(0, 0))
    return moments


def interpolate_qltz_vector(mesh: Mesh, dofmap: DofMap, w, degree: int = None) -> FeFunction:
    """
    Two-step interpolant. Step 1 takes componentwise edge averages. Step 2
    fixes the two cell coefficients on each quadrilateral so that the P1
    divergence moments of w are preserved. Triangles need no second step.
    """
    _check_family(dofmap, 'qltz', 2)
    degree = _resolve(degree)
    coefficients = np.zeros(dofmap.size)
    moment_rule_degree = 2

    for k, cell in enumerate(mesh.cells):
        wk = _restrict(w, k)
        local = _local_averages(mesh, dofmap, k, wk, degree)  # (n_local, 2)

        if cell.kind == CellKind.QUAD:
            basis = dofmap.local_basis(k)
            local[0, :] = 0.0
            rule = cell_rule(mesh.cell_points(k), moment_rule_degree)
            uv = cell.chart.to_local(rule.points)
            q = np.column_stack((uv[:, 1], uv[:, 0]))
            grads = basis.gradients(rule.points)
            # G[j, i, c] = int d_c(phi_i) q_j
            moments_basis = np.einsum('n,nj,nic->jic', rule.weights, q, grads)
            step1 = np.einsum('jic,ic->j', moments_basis, local)
            target = _divergence_moments(mesh, k, wk, degree)
            local[0, :] = np.linalg.solve(step2_matrix(cell.frame), target - step1)

        for c in range(2):
            _scatter(coefficients, dofmap.component_dofs(k, c), local[:, c])

    logger.debug(f"Vector QLTZ interpolant on {mesh.n_cells} cells")
    return FeFunction(dofmap, coefficients)


def interpolate_morley(mesh: Mesh, dofmap: DofMap, phi, grad=None, degree: int = None) -> FeFunction:
    """Vertex values and edge averages of d(phi)/d(n_e)."""
    _check_family(dofmap, 'morley', 1)
    degree = _resolve(degree)
    coefficients = np.zeros(dofmap.size)
    for k in range(mesh.n_cells):
        phik = _restrict(phi, k)
        gradk = _restrict(grad, k) if grad is not None else phik.gradient
        local = np.array([fn.evaluate(phik, gradk) for fn in morley_functionals(mesh.cell_points(k), degree)])
        _scatter(coefficients, dofmap.cell_dofs[k], local * dofmap.cell_signs[k])
    return FeFunction(dofmap, coefficients)


def l2_project_pressure(mesh: Mesh, dofmap: DofMap, q, degree: int = None) -> FeFunction:
    """Cellwise L2 projection; the global mean is removed for zero-mean maps."""
    _check_family(dofmap, 'pressure')
    coefficients = np.zeros(dofmap.size)
    integral = 0.0
    for k in range(mesh.n_cells):
        basis = dofmap.local_basis(k)
        rule = cell_rule(mesh.cell_points(k), degree)
        phi = basis.values(rule.points)
        mass = phi.T @ (rule.weights[:, None] * phi)
        rhs = phi.T @ (rule.weights * np.asarray(_restrict(q, k)(rule.points)))
        local = np.linalg.solve(mass, rhs)
        coefficients[dofmap.cell_dofs[k]] = local
        integral += float(rule.weights @ (phi @ local))

    if dofmap.zero_mean:
        mean = integral / mesh.area
        for k in range(mesh.n_cells):
            coefficients[dofmap.cell_dofs[k][0]] -= mean
    return FeFunction(dofmap, coefficients)

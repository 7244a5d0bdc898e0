"""
Cellwise assembly of the discrete bilinear forms and load vectors.

Local matrices are computed in the local basis and mapped to the global one
with the per-cell DOF signs (S K S). Vector spaces carry a block-diagonal
layout: component c of scalar DOF i sits at i + c * n_dofs.
"""

import numpy as np
import scipy.sparse as sp

from core import logger
from core.errors import IncompatibleMesh
from core.elements.quadrature import cell_rule
from core.mesh.mesh import Mesh
from core.spaces.dofmap import DofMap
from .sparse_system import TripletBuilder

# Exact for products of the cubic (or lower) shape functions and their derivatives
EXACT_DEGREE = 6


def _check(dofmap: DofMap, family: str, components: int = None):
    if dofmap.family != family:
        raise ValueError(f"expected a {family} space, got {dofmap.kind.value}")
    if components is not None and dofmap.components != components:
        raise ValueError(f"expected {components} component(s), got {dofmap.components}")


def _same_mesh(mesh: Mesh, *dofmaps: DofMap):
    for dofmap in dofmaps:
        if dofmap.mesh is not mesh:
            raise IncompatibleMesh("DofMap was built on a different mesh")


def assemble_stiffness(mesh: Mesh, V: DofMap, viscosity: float = 1.0) -> sp.csr_matrix:
    """A_ij = viscosity * sum_K int_K grad phi_i . grad phi_j (block diagonal for vectors)."""
    _check(V, 'qltz')
    _same_mesh(mesh, V)
    builder = TripletBuilder((V.size, V.size))
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        grads = V.local_basis(k).gradients(rule.points)
        local = viscosity * np.einsum('q,qik,qjk->ij', rule.weights, grads, grads)
        local = V.cell_signs[k][:, None] * local * V.cell_signs[k][None, :]
        for c in range(V.components):
            dofs = V.component_dofs(k, c)
            builder.add(dofs, dofs, local)
    logger.debug(f"Stiffness assembled: {V.size} DOFs")
    return builder.tocsr()


def assemble_div(mesh: Mesh, V: DofMap, W: DofMap) -> sp.csr_matrix:
    """B_qv = sum_K int_K div v q."""
    _check(V, 'qltz', 2)
    _check(W, 'pressure')
    _same_mesh(mesh, V, W)
    builder = TripletBuilder((W.size, V.size))
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        grads = V.local_basis(k).gradients(rule.points)
        q = W.local_basis(k).values(rule.points)
        signs = V.cell_signs[k]
        for c in range(2):
            local = np.einsum('n,np,nb->pb', rule.weights, q, grads[:, :, c]) * signs[None, :]
            builder.add(W.cell_dofs[k], V.component_dofs(k, c), local)
    return builder.tocsr()


def assemble_rot(mesh: Mesh, V: DofMap, W: DofMap) -> sp.csr_matrix:
    """R_qv = sum_K int_K (d_x v2 - d_y v1) q."""
    _check(V, 'qltz', 2)
    _check(W, 'pressure')
    _same_mesh(mesh, V, W)
    builder = TripletBuilder((W.size, V.size))
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        grads = V.local_basis(k).gradients(rule.points)
        q = W.local_basis(k).values(rule.points)
        signs = V.cell_signs[k]
        for c, (direction, factor) in enumerate(((1, -1.0), (0, 1.0))):
            local = factor * np.einsum('n,np,nb->pb', rule.weights, q, grads[:, :, direction]) * signs[None, :]
            builder.add(W.cell_dofs[k], V.component_dofs(k, c), local)
    return builder.tocsr()


def assemble_hessian(mesh: Mesh, M: DofMap, scale: float = 1.0) -> sp.csr_matrix:
    """K_ij = scale * sum_K int_K hess phi_i : hess phi_j."""
    _check(M, 'morley', 1)
    _same_mesh(mesh, M)
    builder = TripletBuilder((M.size, M.size))
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        hess = M.local_basis(k).hessians(rule.points)
        local = scale * np.einsum('q,qikl,qjkl->ij', rule.weights, hess, hess)
        local = M.cell_signs[k][:, None] * local * M.cell_signs[k][None, :]
        builder.add(M.cell_dofs[k], M.cell_dofs[k], local)
    return builder.tocsr()


def assemble_pressure_mass(mesh: Mesh, W: DofMap) -> sp.csr_matrix:
    _check(W, 'pressure')
    _same_mesh(mesh, W)
    builder = TripletBuilder((W.size, W.size))
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        q = W.local_basis(k).values(rule.points)
        builder.add(W.cell_dofs[k], W.cell_dofs[k], q.T @ (rule.weights[:, None] * q))
    return builder.tocsr()


def assemble_pressure_mean(mesh: Mesh, W: DofMap) -> np.ndarray:
    """m_i = int q_i; the zero-mean constraint is m . p = 0."""
    _check(W, 'pressure')
    mean = np.zeros(W.size)
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        mean[W.cell_dofs[k]] += rule.weights @ W.local_basis(k).values(rule.points)
    return mean


def assemble_load(mesh: Mesh, V: DofMap, f, degree: int = None) -> np.ndarray:
    """b_i = sum_K int_K f . phi_i; f returns (n,) for scalar and (n, 2) for vector spaces."""
    _same_mesh(mesh, V)
    load = np.zeros(V.size)
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), degree)
        phi = V.local_basis(k).values(rule.points) * V.cell_signs[k][None, :]
        values = np.asarray(f(rule.points), dtype=float).reshape(len(rule.points), V.components)
        for c in range(V.components):
            dofs = V.component_dofs(k, c)
            mask = dofs >= 0
            np.add.at(load, dofs[mask], (rule.weights * values[:, c]) @ phi[:, mask])
    return load


def assemble_curl_load(mesh: Mesh, M: DofMap, f, degree: int = None) -> np.ndarray:
    """b_i = sum_K int_K f . curl psi_i for a Morley space."""
    _check(M, 'morley', 1)
    _same_mesh(mesh, M)
    load = np.zeros(M.size)
    for k in range(mesh.n_cells):
        rule = cell_rule(mesh.cell_points(k), degree)
        grads = M.local_basis(k).gradients(rule.points) * M.cell_signs[k][None, :, None]
        values = np.asarray(f(rule.points), dtype=float)
        # curl psi = (d_y psi, -d_x psi)
        integrand = values[:, None, 0] * grads[:, :, 1] - values[:, None, 1] * grads[:, :, 0]
        dofs = M.cell_dofs[k]
        mask = dofs >= 0
        np.add.at(load, dofs[mask], (rule.weights @ integrand)[mask])
    return load

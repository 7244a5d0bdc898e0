"""
The discrete curl from the Morley space into the vector QLTZ space.

On an edge e with tangent tau_e and normal n_e, curl g = (d_tau g) n_e - (d_n g) tau_e,
so the edge-average DOFs of curl_h g follow from the Morley DOFs alone:
the tangential derivative averages to (g(hi) - g(lo)) / |e| and the normal
derivative average is the edge DOF itself. Quadrilateral cell DOFs are
averages of the local curl.
"""

import numpy as np
import scipy.sparse as sp

from core.assembly.forms import EXACT_DEGREE
from core.assembly.sparse_system import TripletBuilder
from core.elements.quadrature import cell_rule
from core.errors import IncompatibleMesh
from core.mesh.mesh import Mesh
from core.spaces.dofmap import DofMap
from core.spaces.fe_function import FeFunction


def _check_pair(mesh: Mesh, M: DofMap, V: DofMap):
    if M.mesh is not mesh or V.mesh is not mesh:
        raise IncompatibleMesh("DofMaps must be built on the given mesh")
    if M.family != 'morley' or M.components != 1:
        raise ValueError(f"expected a scalar Morley space, got {M}")
    if V.family != 'qltz' or V.components != 2:
        raise ValueError(f"expected a vector QLTZ space, got {V}")
    if V.kind.constrained and not M.kind.constrained:
        raise ValueError("a constrained velocity space needs a constrained Morley space")


def curl_matrix(mesh: Mesh, M: DofMap, V: DofMap) -> sp.csr_matrix:
    """C with coefficients(curl_h g) = C @ coefficients(g)."""
    _check_pair(mesh, M, V)
    builder = TripletBuilder((V.size, M.size))

    for e, edge in enumerate(mesh.edges):
        row = V.edge_dofs[e]
        if row < 0:
            continue
        lo, hi = edge.vertices
        cols = np.array([M.vertex_dofs[lo], M.vertex_dofs[hi], M.edge_dofs[e]])
        for c in range(2):
            block = np.array([[-edge.normal[c] / edge.length, edge.normal[c] / edge.length, -edge.tangent[c]]])
            builder.add(np.array([row + c * V.n_dofs]), cols, block)

    for k in mesh.quad_indices:
        row = V.cell_bubble_dofs[k]
        if row < 0:
            continue
        rule = cell_rule(mesh.cell_points(k), EXACT_DEGREE)
        grads = M.local_basis(k).gradients(rule.points) * M.cell_signs[k][None, :, None]
        area = rule.weights.sum()
        averages = np.tensordot(rule.weights, grads, axes=(0, 0)) / area  # (n_basis, 2)
        # curl = (d_y g, -d_x g)
        for c, (direction, factor) in enumerate(((1, 1.0), (0, -1.0))):
            builder.add(np.array([row + c * V.n_dofs]), M.cell_dofs[k], factor * averages[None, :, direction])

    return builder.tocsr()


def curl_morley(mesh: Mesh, M: DofMap, V: DofMap, g: FeFunction) -> FeFunction:
    if g.dofmap is not M:
        raise IncompatibleMesh("function does not live on the given Morley space")
    return FeFunction(V, curl_matrix(mesh, M, V) @ g.coefficients)

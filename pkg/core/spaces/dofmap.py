"""
Global degree-of-freedom maps.

Numbering is deterministic: edge DOFs by edge id, then cell DOFs by cell id,
then vertex DOFs by vertex id. Constrained kinds (suffix 0) drop boundary
DOFs from the numbering; their cell tables hold -1 in those slots. Vector
maps stack two copies of the scalar numbering.
"""

from enum import Enum
from functools import cached_property

import numpy as np

from core import logger
from core.elements.element_factory import ElementFactory
from core.elements.local_basis import LocalBasis
from core.mesh.mesh import CellKind, Mesh


class SpaceKind(Enum):
    QLTZ = "qltz"
    QLTZ0 = "qltz0"
    MORLEY = "morley"
    MORLEY0 = "morley0"
    PRESSURE = "pressure"
    PRESSURE0 = "pressure0"

    @property
    def family(self) -> str:
        return self.value.rstrip('0')

    @property
    def constrained(self) -> bool:
        return self.value.endswith('0')


class DofMap:
    def __init__(self, mesh: Mesh, kind: SpaceKind, components: int = 1):
        if kind.family == 'pressure' and components != 1:
            raise ValueError("pressure spaces are scalar")
        if components not in (1, 2):
            raise ValueError(f"components must be 1 or 2, got {components}")

        self.mesh = mesh
        self.kind = kind
        self.components = components
        self.zero_mean = kind == SpaceKind.PRESSURE0

        if kind.family == 'pressure':
            self._number_pressure()
        else:
            self._number_continuous()

        self._bases: dict[int, LocalBasis] = {}
        logger.debug(f"DofMap {kind.value} x{components}: {self.n_dofs} scalar DOFs, dim {self.dim}")

    # ------------------------------------------------------------------

    def _number_continuous(self):
        mesh = self.mesh
        constrained = self.kind.constrained
        next_dof = 0

        edge_dofs = np.full(mesh.n_edges, -1, dtype=int)
        for e in range(mesh.n_edges):
            if not (constrained and mesh.boundary_edge_mask[e]):
                edge_dofs[e] = next_dof
                next_dof += 1

        cell_bubble = np.full(mesh.n_cells, -1, dtype=int)
        vertex_dofs = np.full(mesh.n_vertices, -1, dtype=int)
        if self.kind.family == 'qltz':
            for k in mesh.quad_indices:
                cell_bubble[k] = next_dof
                next_dof += 1
        else:
            for v in range(mesh.n_vertices):
                if not (constrained and mesh.boundary_vertex_mask[v]):
                    vertex_dofs[v] = next_dof
                    next_dof += 1

        self.edge_dofs = edge_dofs
        self.cell_bubble_dofs = cell_bubble
        self.vertex_dofs = vertex_dofs
        self.n_dofs = next_dof

        self.cell_dofs: list[np.ndarray] = []
        self.cell_signs: list[np.ndarray] = []
        for k, cell in enumerate(mesh.cells):
            edges = edge_dofs[list(cell.edges)]
            if self.kind.family == 'qltz':
                if cell.kind == CellKind.QUAD:
                    dofs = np.concatenate(([cell_bubble[k]], edges))
                else:
                    dofs = edges
                signs = np.ones(len(dofs))
            else:
                dofs = np.concatenate((vertex_dofs[list(cell.vertices)], edges))
                signs = np.concatenate((np.ones(cell.n_vertices), cell.signs))
            self.cell_dofs.append(dofs)
            self.cell_signs.append(signs.astype(float))

    def _number_pressure(self):
        self.edge_dofs = np.full(self.mesh.n_edges, -1, dtype=int)
        self.vertex_dofs = np.full(self.mesh.n_vertices, -1, dtype=int)
        self.cell_bubble_dofs = np.full(self.mesh.n_cells, -1, dtype=int)
        self.cell_dofs = []
        self.cell_signs = []
        next_dof = 0
        for cell in self.mesh.cells:
            size = 3 if cell.kind == CellKind.QUAD else 1
            self.cell_dofs.append(np.arange(next_dof, next_dof + size))
            self.cell_signs.append(np.ones(size))
            next_dof += size
        self.n_dofs = next_dof

    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        """Length of a coefficient vector."""
        return self.components * self.n_dofs

    @property
    def dim(self) -> int:
        return self.size - (1 if self.zero_mean else 0)

    @property
    def family(self) -> str:
        return self.kind.family

    def component_dofs(self, k: int, component: int) -> np.ndarray:
        dofs = self.cell_dofs[k]
        return np.where(dofs >= 0, dofs + component * self.n_dofs, -1)

    def local_basis(self, k: int) -> LocalBasis:
        if k not in self._bases:
            cell = self.mesh.cells[k]
            element = ElementFactory.for_cell(self.family, cell.kind)
            self._bases[k] = element.basis(self.mesh.cell_points(k))
        return self._bases[k]

    @cached_property
    def boundary_dofs(self) -> np.ndarray:
        """Scalar DOFs of the unconstrained numbering that a constrained map drops."""
        if self.family == 'pressure' or not self.kind.constrained:
            return np.zeros(0, dtype=int)
        unconstrained = build_dofmap(self.mesh, self.family)
        dropped = [unconstrained.edge_dofs[e] for e in range(self.mesh.n_edges) if self.edge_dofs[e] < 0]
        dropped += [unconstrained.vertex_dofs[v] for v in range(self.mesh.n_vertices)
                    if self.vertex_dofs[v] < 0 and unconstrained.vertex_dofs[v] >= 0]
        return np.array(sorted(dropped), dtype=int)

    def __repr__(self) -> str:
        return f"DofMap({self.kind.value}, components={self.components}, dim={self.dim})"


def build_dofmap(mesh: Mesh, kind: SpaceKind | str, components: int = 1) -> DofMap:
    if isinstance(kind, str):
        try:
            kind = SpaceKind(kind)
        except ValueError:
            raise ValueError(f"Unsupported space: {kind}")
    return DofMap(mesh, kind, components)

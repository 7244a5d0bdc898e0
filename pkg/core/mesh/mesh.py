"""
Conforming mixed triangle/quadrilateral mesh of a polygonal domain.

Edges are numbered by their sorted (lo, hi) vertex pair. Each edge carries a
global tangent running from the lower to the higher vertex index and the
normal obtained by rotating it clockwise, n_e = (tau_y, -tau_x). Local edge i
of a cell joins its vertices i and i + 1 (counter-clockwise); its incidence
sign is +1 when that direction agrees with tau_e.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence

import numpy as np

from core import logger
from core.errors import GeometryError, MeshTopologyError
from .geometry import AffineChart, QuadFrame, contains, cross2, quad_frame, triangle_chart


class CellKind(Enum):
    TRIANGLE = "tri"
    QUAD = "quad"

    @staticmethod
    def from_vertex_count(count: int) -> 'CellKind':
        if count == 3:
            return CellKind.TRIANGLE
        if count == 4:
            return CellKind.QUAD
        raise MeshTopologyError(f"cells must have 3 or 4 vertices, got {count}")


@dataclass(frozen=True, eq=False)
class Edge:
    vertices: tuple[int, int]
    tangent: np.ndarray
    normal: np.ndarray
    length: float
    cells: tuple[int, ...]

    @property
    def boundary(self) -> bool:
        return len(self.cells) == 1


@dataclass(frozen=True, eq=False)
class Cell:
    kind: CellKind
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    signs: tuple[int, ...]
    chart: AffineChart
    frame: QuadFrame | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


class Mesh:
    def __init__(self, vertices, cells: Sequence[Sequence[int]]):
        self.vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
        n_vertices = len(self.vertices)
        if len(cells) == 0:
            raise MeshTopologyError("mesh has no cells")

        raw_cells = []
        for k, cell in enumerate(cells):
            cell = tuple(int(v) for v in cell)
            CellKind.from_vertex_count(len(cell))
            if len(set(cell)) != len(cell):
                raise MeshTopologyError(f"cell {k} repeats a vertex")
            if min(cell) < 0 or max(cell) >= n_vertices:
                raise MeshTopologyError(f"cell {k} references a missing vertex")
            raw_cells.append(cell)

        incidence: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for k, cell in enumerate(raw_cells):
            for i in range(len(cell)):
                a, b = cell[i], cell[(i + 1) % len(cell)]
                incidence.setdefault((min(a, b), max(a, b)), []).append((k, i))

        keys = sorted(incidence)
        edge_index = {key: e for e, key in enumerate(keys)}
        self.edges: list[Edge] = []
        for key in keys:
            owners = incidence[key]
            if len(owners) > 2:
                raise MeshTopologyError(f"edge {key} is shared by {len(owners)} cells")
            if len(owners) == 2:
                directions = [raw_cells[k][i] for k, i in owners]
                if directions[0] == directions[1]:
                    raise MeshTopologyError(f"cells {owners[0][0]} and {owners[1][0]} traverse edge {key} in the same direction")
            lo, hi = key
            vector = self.vertices[hi] - self.vertices[lo]
            length = float(np.linalg.norm(vector))
            tangent = vector / length
            normal = np.array([tangent[1], -tangent[0]])
            self.edges.append(Edge(key, tangent, normal, length, tuple(k for k, _ in owners)))

        self.cells: list[Cell] = []
        for k, cell in enumerate(raw_cells):
            points = self.vertices[list(cell)]
            kind = CellKind.from_vertex_count(len(cell))
            try:
                if kind == CellKind.QUAD:
                    frame = quad_frame(points)
                    chart = frame.chart()
                else:
                    frame = None
                    chart = triangle_chart(points)
            except GeometryError as err:
                raise type(err)(str(err), cell=k) from err

            edges = []
            signs = []
            for i in range(len(cell)):
                a, b = cell[i], cell[(i + 1) % len(cell)]
                edges.append(edge_index[(min(a, b), max(a, b))])
                signs.append(1 if a < b else -1)
            self.cells.append(Cell(kind, cell, tuple(edges), tuple(signs), chart, frame))

        logger.debug(f"Mesh built: {self.counts()}")
        if not self.is_simply_connected:
            logger.warning(f"Mesh has Euler characteristic {self.euler_characteristic}; the domain is not simply connected")

    # ------------------------------------------------------------------
    # Combinatorics
    # ------------------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def boundary_edge_mask(self) -> np.ndarray:
        return np.array([edge.boundary for edge in self.edges])

    @cached_property
    def boundary_vertex_mask(self) -> np.ndarray:
        mask = np.zeros(self.n_vertices, dtype=bool)
        for edge in self.edges:
            if edge.boundary:
                mask[list(edge.vertices)] = True
        return mask

    @cached_property
    def corner_vertex_mask(self) -> np.ndarray:
        """Boundary vertices where the two boundary edges are not collinear."""
        tangents: dict[int, list[np.ndarray]] = {}
        for edge in self.edges:
            if edge.boundary:
                for v in edge.vertices:
                    tangents.setdefault(v, []).append(edge.tangent)
        mask = np.zeros(self.n_vertices, dtype=bool)
        for v, ts in tangents.items():
            mask[v] = any(abs(cross2(ts[0], t)) > 1e-10 for t in ts[1:])
        return mask

    @cached_property
    def quad_indices(self) -> np.ndarray:
        return np.array([k for k, c in enumerate(self.cells) if c.kind == CellKind.QUAD], dtype=int)

    @property
    def n_quads(self) -> int:
        return len(self.quad_indices)

    @property
    def n_triangles(self) -> int:
        return self.n_cells - self.n_quads

    @property
    def n_interior_edges(self) -> int:
        return int(np.count_nonzero(~self.boundary_edge_mask))

    @property
    def n_interior_vertices(self) -> int:
        return int(np.count_nonzero(~self.boundary_vertex_mask))

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_cells

    @property
    def is_simply_connected(self) -> bool:
        # Connected meshes of a disc have chi = 1; every hole lowers it by one
        return self.euler_characteristic == 1

    def counts(self) -> dict:
        n_boundary_edges = int(np.count_nonzero(self.boundary_edge_mask))
        return {
            'F': self.n_cells,
            'Q': self.n_quads,
            'T': self.n_triangles,
            'E': self.n_edges,
            'E_I': self.n_edges - n_boundary_edges,
            'E_B': n_boundary_edges,
            'X': self.n_vertices,
            'X_I': self.n_interior_vertices,
            'X_B': int(np.count_nonzero(self.boundary_vertex_mask)),
            'X_C': int(np.count_nonzero(self.corner_vertex_mask)),
        }

    # ------------------------------------------------------------------
    # Geometry
    # ------------------------------------------------------------------

    def cell_points(self, k: int) -> np.ndarray:
        return self.vertices[list(self.cells[k].vertices)]

    def edge_points(self, e: int) -> np.ndarray:
        return self.vertices[list(self.edges[e].vertices)]

    def local_edge_points(self, k: int, i: int) -> np.ndarray:
        """Endpoints of local edge i of cell k in counter-clockwise order."""
        cell = self.cells[k]
        a = cell.vertices[i]
        b = cell.vertices[(i + 1) % cell.n_vertices]
        return self.vertices[[a, b]]

    def cell_area(self, k: int) -> float:
        p = self.cell_points(k)
        return 0.5 * float(np.sum(cross2(p, np.roll(p, -1, axis=0))))

    def cell_diameter(self, k: int) -> float:
        p = self.cell_points(k)
        return float(max(np.linalg.norm(p[i] - p[j]) for i in range(len(p)) for j in range(i + 1, len(p))))

    @cached_property
    def h(self) -> float:
        return max(self.cell_diameter(k) for k in range(self.n_cells))

    @cached_property
    def area(self) -> float:
        return sum(self.cell_area(k) for k in range(self.n_cells))

    def contains(self, k: int, point) -> bool:
        return contains(self.cell_points(k), point)

    def __repr__(self) -> str:
        return f"Mesh(F={self.n_cells}, Q={self.n_quads}, T={self.n_triangles}, X={self.n_vertices})"

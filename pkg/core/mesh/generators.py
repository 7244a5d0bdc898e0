"""
Mesh generators on the unit square.

Vertex (i, j) of an n x n grid has index j * (n + 1) + i and sits at
(i / n, j / n). Cell (i, j) lists its vertices as (top-left, bottom-left,
bottom-right, top-right), so r runs along x and s along y.
"""

import math

import numpy as np

from core import logger
from core.config import FemConfig
from core.errors import ConfigError, GeometryError, MeshTopologyError, PerturbationFailed
from .geometry import quad_frame
from .mesh import Mesh

MAX_PERTURBATION = 0.3

MIXED_PATTERNS = ('none', 'all', 'diagonal-split-half', 'checkerboard')


def _check_n(n: int):
    if int(n) != n or n < 1:
        raise ConfigError(f"grid resolution must be a positive integer, got {n}")


def _disc_mesh(vertices, cells) -> Mesh:
    mesh = Mesh(vertices, cells)
    logger.assert_true(mesh.euler_characteristic == 1,
                       f"generated grid violates F + X = E + 1: {mesh.counts()}", MeshTopologyError)
    return mesh


def _grid_vertices(n: int) -> np.ndarray:
    ticks = np.arange(n + 1) / n
    x, y = np.meshgrid(ticks, ticks)
    return np.column_stack((x.ravel(), y.ravel()))


def _grid_cells(n: int) -> list[tuple[int, int, int, int]]:
    cells = []
    for j in range(n):
        for i in range(n):
            bl = j * (n + 1) + i
            tl = bl + n + 1
            cells.append((tl, bl, bl + 1, tl + 1))
    return cells


def generate_structured_quads(n: int) -> Mesh:
    _check_n(n)
    return _disc_mesh(_grid_vertices(n), _grid_cells(n))


def _quad_acceptable(points: np.ndarray, clamp: float) -> bool:
    try:
        frame = quad_frame(points)
    except GeometryError:
        return False
    return abs(frame.alpha) + abs(frame.beta) <= clamp


def _perturb(n: int, magnitude: float, seed: int) -> np.ndarray:
    config = FemConfig()
    vertices = _grid_vertices(n)
    if magnitude == 0.0:
        return vertices

    cells = _grid_cells(n)
    vertex_cells: dict[int, list[int]] = {}
    for k, cell in enumerate(cells):
        for v in cell:
            vertex_cells.setdefault(v, []).append(k)

    rng = np.random.default_rng(seed)
    h = 1.0 / n
    clamp = config.perturbation_clamp
    attempts = config.perturbation_attempts

    for j in range(1, n):
        for i in range(1, n):
            v = j * (n + 1) + i
            base = vertices[v].copy()
            for _ in range(attempts):
                vertices[v] = base + rng.uniform(-1.0, 1.0, size=2) * magnitude * h
                if all(_quad_acceptable(vertices[list(cells[k])], clamp) for k in vertex_cells[v]):
                    break
            else:
                vertices[v] = base
                raise PerturbationFailed(f"vertex {v} rejected after {attempts} attempts")
    return vertices


def generate_perturbed_quads(n: int, magnitude: float, seed: int) -> Mesh:
    """
    Structured grid with every interior vertex moved by a uniform random offset
    in [-magnitude * h, magnitude * h]^2. Boundary vertices stay put. A draw that
    makes an incident cell degenerate or |alpha| + |beta| exceed the clamp is
    redrawn. The same (n, magnitude, seed) always yields the same mesh.
    """
    _check_n(n)
    if not 0.0 <= magnitude <= MAX_PERTURBATION:
        raise ConfigError(f"perturbation magnitude must lie in [0, {MAX_PERTURBATION}], got {magnitude}")
    vertices = _perturb(n, float(magnitude), seed)
    logger.debug(f"Perturbed {n}x{n} grid: magnitude={magnitude}, seed={seed}")
    return _disc_mesh(vertices, _grid_cells(n))


def _split_mask(n: int, pattern: str) -> np.ndarray:
    i, j = np.meshgrid(np.arange(n), np.arange(n))
    if pattern == 'none':
        mask = np.zeros((n, n), dtype=bool)
    elif pattern == 'all':
        mask = np.ones((n, n), dtype=bool)
    elif pattern == 'diagonal-split-half':
        mask = i < math.ceil(n / 2)
    elif pattern == 'checkerboard':
        mask = (i + j) % 2 == 0
    else:
        raise ConfigError(f"Unsupported pattern: {pattern}")
    return mask.ravel()


def generate_mixed(n: int, pattern: str = 'checkerboard', magnitude: float = 0.0, seed: int = 0) -> Mesh:
    """
    Grid in which the cells selected by `pattern` are split into two triangles
    along their bottom-left to top-right diagonal. The grid is perturbed before
    splitting.
    """
    _check_n(n)
    if not 0.0 <= magnitude <= MAX_PERTURBATION:
        raise ConfigError(f"perturbation magnitude must lie in [0, {MAX_PERTURBATION}], got {magnitude}")
    split = _split_mask(n, pattern)
    vertices = _perturb(n, float(magnitude), seed)

    cells = []
    for k, (tl, bl, br, tr) in enumerate(_grid_cells(n)):
        if split[k]:
            cells.append((bl, br, tr))
            cells.append((bl, tr, tl))
        else:
            cells.append((tl, bl, br, tr))
    return _disc_mesh(vertices, cells)

import tempfile
from pathlib import Path

import numpy as np
import pytest

from core.config import FemConfig
from core.mesh import Mesh, generate_mixed, generate_perturbed_quads, generate_structured_quads

PROJECT_ROOT = Path(__file__).parent.parent


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Each test reads fem.json afresh and ignores a degree override in the shell."""
    monkeypatch.delenv("FEM_QUAD_DEGREE", raising=False)
    FemConfig.reset()
    yield
    FemConfig.reset()


@pytest.fixture
def temp_dir():
    """Provide a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def unit_square_vertices():
    """Unit square as (top-left, bottom-left, bottom-right, top-right)."""
    return np.array([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0], [1.0, 1.0]])


@pytest.fixture
def trapezoid_vertices():
    return np.array([[0.0, 1.0], [0.0, 0.0], [2.0, 0.0], [1.0, 1.0]])


@pytest.fixture
def reference_triangle():
    return np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


def _random_convex_quad(generator):
    # A jittered square with |alpha| + |beta| bounded well away from one
    base = np.array([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0], [1.0, 1.0]])
    jitter = generator.uniform(-0.15, 0.15, size=(4, 2))
    scale = generator.uniform(0.5, 2.0)
    angle = generator.uniform(0.0, 2.0 * np.pi)
    rotation = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    return ((base + jitter) * scale) @ rotation.T + generator.uniform(-1.0, 1.0, size=2)


@pytest.fixture
def random_convex_quads(rng):
    return [_random_convex_quad(rng) for _ in range(100)]


@pytest.fixture
def random_triangles(rng):
    triangles = []
    while len(triangles) < 100:
        p = rng.uniform(-1.0, 1.0, size=(3, 2))
        area2 = (p[1, 0] - p[0, 0]) * (p[2, 1] - p[0, 1]) - (p[1, 1] - p[0, 1]) * (p[2, 0] - p[0, 0])
        if abs(area2) < 0.2:
            continue
        triangles.append(p if area2 > 0 else p[[0, 2, 1]])
    return triangles


@pytest.fixture
def square_mesh_2():
    return generate_structured_quads(2)


@pytest.fixture
def square_mesh_4():
    return generate_structured_quads(4)


@pytest.fixture
def perturbed_mesh_4():
    return generate_perturbed_quads(4, 0.2, 7)


@pytest.fixture
def checkerboard_mesh_2():
    return generate_mixed(2, 'checkerboard')


@pytest.fixture
def checkerboard_mesh_4():
    return generate_mixed(4, 'checkerboard', 0.15, 3)


@pytest.fixture
def single_quad_mesh(unit_square_vertices):
    return Mesh(unit_square_vertices, [(0, 1, 2, 3)])


@pytest.fixture
def meshes_dir():
    return PROJECT_ROOT / "meshes"

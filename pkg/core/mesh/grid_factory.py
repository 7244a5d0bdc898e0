from enum import Enum

from core.errors import ConfigError
from .generators import generate_mixed, generate_perturbed_quads, generate_structured_quads
from .mesh import Mesh

DEFAULT_PERTURBATION = 0.2


class GridType(Enum):
    QUAD = "quad"
    PERTURBED_QUAD = "perturbed-quad"
    MIXED = "mixed"


class GridFactory:
    @staticmethod
    def from_id(grid_id: str) -> GridType:
        for grid_type in GridType:
            if grid_type.value == grid_id:
                return grid_type
        raise ValueError(f"Unsupported grid: {grid_id}")

    @staticmethod
    def check_magnitude(grid_id: str, magnitude: float | None):
        """Structured grids take no perturbation; a nonzero magnitude there is a ConfigError."""
        if GridFactory.from_id(grid_id) == GridType.QUAD and magnitude:
            raise ConfigError(f"perturbation magnitude {magnitude} has no effect on '{GridType.QUAD.value}' grids; "
                              f"use '{GridType.PERTURBED_QUAD.value}' or '{GridType.MIXED.value}'")

    @staticmethod
    def build(grid_id: str, n: int, magnitude: float = None, seed: int = 1,
              pattern: str = 'checkerboard') -> Mesh:
        grid_type = GridFactory.from_id(grid_id)
        GridFactory.check_magnitude(grid_id, magnitude)
        if grid_type == GridType.QUAD:
            return generate_structured_quads(n)
        if grid_type == GridType.PERTURBED_QUAD:
            return generate_perturbed_quads(n, DEFAULT_PERTURBATION if magnitude is None else magnitude, seed)
        return generate_mixed(n, pattern, 0.0 if magnitude is None else magnitude, seed)

    @staticmethod
    def get_available_grids() -> list[dict]:
        return [{'id': g.value, 'name': g.name.replace('_', ' ').title()} for g in GridType]

from dataclasses import dataclass, field
from pathlib import Path

from core.errors import ConfigError
from core.mesh.generators import MAX_PERTURBATION, MIXED_PATTERNS
from core.mesh.grid_factory import GridFactory, GridType
from .problem_factory import ProblemFactory


@dataclass
class ExperimentConfig:
    """One refinement study. Raises ConfigError on invalid settings."""
    problem: str
    grid: str = GridType.QUAD.value
    levels: list[int] = field(default_factory=lambda: [4, 8, 16, 32])
    magnitude: float | None = None
    seed: int = 1
    pattern: str = 'checkerboard'
    csv_path: Path | None = None
    svg_path: Path | None = None
    export_dir: Path | None = None

    def __post_init__(self):
        try:
            ProblemFactory.from_id(self.problem)
            GridFactory.from_id(self.grid)
        except ValueError as err:
            raise ConfigError(str(err)) from err

        self.levels = [int(n) for n in self.levels]
        if not self.levels:
            raise ConfigError("at least one level is required")
        if self.levels[0] < 1:
            raise ConfigError(f"levels must be positive, got {self.levels}")
        if any(fine <= coarse for coarse, fine in zip(self.levels, self.levels[1:])):
            raise ConfigError(f"levels must be strictly increasing, got {self.levels}")

        if self.magnitude is not None and not 0.0 <= self.magnitude <= MAX_PERTURBATION:
            raise ConfigError(f"perturbation magnitude must lie in [0, {MAX_PERTURBATION}], got {self.magnitude}")
        GridFactory.check_magnitude(self.grid, self.magnitude)
        if self.pattern not in MIXED_PATTERNS:
            raise ConfigError(f"Unsupported pattern: {self.pattern}")

        if self.csv_path is not None:
            self.csv_path = Path(self.csv_path)
        if self.svg_path is not None:
            self.svg_path = Path(self.svg_path)
        if self.export_dir is not None:
            self.export_dir = Path(self.export_dir)

    def level_seed(self, index: int) -> int:
        """Perturbed levels are re-perturbed independently."""
        return self.seed + index

    def to_dict(self) -> dict:
        return {
            'problem': self.problem,
            'grid': self.grid,
            'levels': list(self.levels),
            'magnitude': self.magnitude,
            'seed': self.seed,
            'pattern': self.pattern
        }

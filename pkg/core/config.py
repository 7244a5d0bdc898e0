import json
import os
from pathlib import Path
from typing import Any, Dict

from .errors import ConfigError

DEGREE_ENV_VAR = "FEM_QUAD_DEGREE"
# Highest degree the cell and edge rules integrate exactly
MAX_QUADRATURE_DEGREE = 20


class FemConfig:
    """Numerical settings loaded once from fem.json in the project root."""

    _instance = None
    _config: Dict[str, Any] = {}

    def __new__(cls):
        if cls._instance is None:
            instance = super().__new__(cls)
            instance._load_config()
            cls._instance = instance
        return cls._instance

    @classmethod
    def reset(cls):
        """Drop the cached instance so the next access reloads fem.json"""
        cls._instance = None

    def _load_config(self):
        config_path = Path(__file__).parent.parent / "fem.json"
        if not config_path.exists():
            raise FileNotFoundError(f"fem.json not found at {config_path}")

        with open(config_path, 'r') as f:
            self._config = json.load(f)

        override = os.environ.get(DEGREE_ENV_VAR)
        if override is not None:
            try:
                degree = int(override)
            except ValueError:
                raise ConfigError(f"{DEGREE_ENV_VAR} must be an integer, got {override!r}")
            if not 0 <= degree <= MAX_QUADRATURE_DEGREE:
                raise ConfigError(f"{DEGREE_ENV_VAR} must lie in [0, {MAX_QUADRATURE_DEGREE}], got {degree}")
            self._config['quadrature_degree'] = degree

    def get(self, key: str) -> Any:
        if key not in self._config:
            raise KeyError(f"Setting '{key}' not found in fem.json")
        return self._config[key]

    @property
    def quadrature_degree(self) -> int:
        return int(self.get('quadrature_degree'))

    @property
    def solver_tolerance(self) -> float:
        return float(self.get('solver_tolerance'))

    @property
    def direct_solver_max_dofs(self) -> int:
        return int(self.get('direct_solver_max_dofs'))

    @property
    def dense_infsup_max_dofs(self) -> int:
        return int(self.get('dense_infsup_max_dofs'))

    @property
    def rank_threshold(self) -> float:
        return float(self.get('rank_threshold'))

    @property
    def convexity_tolerance(self) -> float:
        return float(self.get('convexity_tolerance'))

    @property
    def area_tolerance(self) -> float:
        return float(self.get('area_tolerance'))

    @property
    def perturbation_clamp(self) -> float:
        return float(self.get('perturbation_clamp'))

    @property
    def perturbation_attempts(self) -> int:
        return int(self.get('perturbation_attempts'))

    @property
    def condition_limit(self) -> float:
        return float(self.get('condition_limit'))

    @property
    def viscosity(self) -> float:
        return float(self.get('viscosity'))

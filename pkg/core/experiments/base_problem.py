"""
Abstract base class for model problems.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict

from core.mesh.mesh import Mesh
from .manufactured import ManufacturedSolution


@dataclass
class LevelSolution:
    """Errors of one discrete solve against the manufactured solution."""
    dof_u: int
    dof_p: int | None
    errors: Dict[str, float] = field(default_factory=dict)


class BaseProblem(ABC):
    """
    A model problem with a built-in manufactured solution.

    Problems own their discretization choice: which spaces, which forms,
    which solver. `solve(mesh)` runs one refinement level end to end.
    """

    # Norms reported by this problem, as ConvergenceRow error keys
    norms: tuple[str, ...] = ()

    def __init__(self, problem_id: str, description: str):
        self.problem_id = problem_id
        self.description = description

    @staticmethod
    @abstractmethod
    def get_id() -> str:
        """IMPORTANT: Stable identifier used in APIs. Do not change once set."""
        pass

    @staticmethod
    @abstractmethod
    def get_name() -> str:
        """Human-readable name."""
        pass

    @abstractmethod
    def manufactured(self) -> ManufacturedSolution:
        pass

    @abstractmethod
    def solve(self, mesh: Mesh, export_path: Path = None) -> LevelSolution:
        """Solve one level; with `export_path` the assembled system is written in Matrix Market format."""
        pass

    def get_metadata(self) -> Dict[str, Any]:
        return {
            'problem_id': self.problem_id,
            'description': self.description,
            'problem_type': self.__class__.__name__
        }

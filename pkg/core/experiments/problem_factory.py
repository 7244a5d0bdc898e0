from enum import Enum
from typing import Any, Dict, List

from .base_problem import BaseProblem
from .problems import BiharmonicProblem, PoissonProblem, StokesProblem


class ProblemType(Enum):
    POISSON = PoissonProblem
    STOKES = StokesProblem
    BIHARMONIC = BiharmonicProblem


class ProblemFactory:
    @staticmethod
    def from_id(problem_id: str) -> BaseProblem:
        for problem_type in ProblemType:
            if problem_type.value.get_id() == problem_id:
                return problem_type.value()
        raise ValueError(f"Unsupported problem: {problem_id}")

    @staticmethod
    def get_available_problems() -> List[Dict[str, Any]]:
        return [
            {
                'id': problem_type.value.get_id(),
                'name': problem_type.value.get_name()
            }
            for problem_type in ProblemType
        ]

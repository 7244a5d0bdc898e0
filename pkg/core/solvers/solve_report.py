from dataclasses import dataclass, field

import numpy as np


@dataclass
class SolveReport:
    solution: np.ndarray
    residual: float
    method: str
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'method': self.method,
            'residual': self.residual,
            'size': int(len(self.solution)),
            'stats': self.stats
        }

    def __repr__(self) -> str:
        return f"SolveReport(method={self.method}, residual={self.residual:.3e})"

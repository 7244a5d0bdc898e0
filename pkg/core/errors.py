"""
Exception hierarchy for QuadStokes.

Every error raised on purpose by the library derives from FemError. Input
problems also derive from ValueError and numerical breakdowns from
ArithmeticError or RuntimeError, so callers can catch either family.
"""


class FemError(Exception):
    """Root of all QuadStokes errors."""


# ---------------------------------------------------------------------------
# Geometry and mesh
# ---------------------------------------------------------------------------

class GeometryError(FemError, ValueError):
    """A cell violates a geometric requirement. `cell` names it when known."""

    def __init__(self, message: str, cell: int = None):
        if cell is not None:
            message = f"cell {cell}: {message}"
        super().__init__(message)
        self.cell = cell


class NonConvex(GeometryError):
    pass


class Degenerate(GeometryError):
    pass


class BadOrientation(GeometryError):
    pass


class MeshTopologyError(FemError, ValueError):
    pass


class PerturbationFailed(FemError, RuntimeError):
    pass


class ParseError(FemError, ValueError):
    def __init__(self, message: str, line: int = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# ---------------------------------------------------------------------------
# Elements and spaces
# ---------------------------------------------------------------------------

class IllConditioned(FemError, ArithmeticError):
    pass


class UnsupportedDegree(FemError, ValueError):
    pass


class SingularStep2(FemError, ArithmeticError):
    pass


class PointOutsideCell(FemError, ValueError):
    pass


class IncompatibleMesh(FemError, ValueError):
    pass


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------

class NotPositiveDefinite(FemError, ArithmeticError):
    pass


class NoConvergence(FemError, RuntimeError):
    pass


class RankDeficient(FemError, ArithmeticError):
    pass


class EigFailure(FemError, RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Checks and experiments
# ---------------------------------------------------------------------------

class CheckFailed(FemError, RuntimeError):
    def __init__(self, check_id: str, message: str, report=None):
        super().__init__(f"{check_id}: {message}")
        self.check_id = check_id
        self.report = report


class ConfigError(FemError, ValueError):
    pass


class TooFewPoints(FemError, ValueError):
    pass

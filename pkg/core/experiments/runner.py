"""
Refinement studies, complex checks and inf-sup tables driven from an
ExperimentConfig or plain arguments.
"""

from pathlib import Path

import numpy as np
import pandas as pd

from core import logger
from core.assembly import assemble_div, assemble_pressure_mass, assemble_pressure_mean, assemble_stiffness
from core.mesh.grid_factory import GridFactory
from core.mesh.mesh import Mesh
from core.result import ComplexReport
from core.solvers import estimate_infsup
from core.spaces import build_dofmap
from core.stokes_complex import CheckType, check_exact_sequence, zero_largest_entry
from .convergence_row import CSV_COLUMNS, H2_COLUMNS, ConvergenceRow, fill_rates
from .experiment_config import ExperimentConfig
from .manufactured import bubble, quadratic_velocity, stokes_solution
from .plot import emit_plot
from .problem_factory import ProblemFactory

INTEGER_COLUMNS = {'n': 'Int64', 'dof_u': 'Int64', 'dof_p': 'Int64'}


def rows_to_frame(rows: list[ConvergenceRow], with_h2: bool = False) -> pd.DataFrame:
    columns = CSV_COLUMNS + (H2_COLUMNS if with_h2 else [])
    frame = pd.DataFrame([row.to_dict() for row in rows], columns=columns)
    return frame.astype(INTEGER_COLUMNS)


def write_csv(frame: pd.DataFrame, path: Path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format='%.12e', lineterminator='\n')
    logger.info(f"Wrote {len(frame)} rows to {path}")


def run_convergence(config: ExperimentConfig) -> list[ConvergenceRow]:
    problem = ProblemFactory.from_id(config.problem)
    logger.info(f"Convergence study: {problem.get_name()} on {config.grid}, levels {config.levels}")

    rows = []
    if config.export_dir is not None:
        config.export_dir.mkdir(parents=True, exist_ok=True)
    for index, n in enumerate(config.levels):
        mesh = GridFactory.build(config.grid, n, config.magnitude, config.level_seed(index), config.pattern)
        export_path = None
        if config.export_dir is not None:
            export_path = config.export_dir / f"{problem.get_id()}_{config.grid}_n{n}.mtx"
        with logger.timed(f"{problem.get_id()} solve at n={n}"):
            level = problem.solve(mesh, export_path=export_path)
        errors = level.errors
        rows.append(ConvergenceRow(
            n=n,
            h=1.0 / n,
            dof_u=level.dof_u,
            dof_p=level.dof_p,
            err_l2=errors.get('l2'),
            err_h1=errors.get('h1'),
            err_p_l2=errors.get('p_l2'),
            err_h2=errors.get('h2')
        ))
        logger.debug(f"n={n}: dofs {level.dof_u}/{level.dof_p}, errors {errors}")

    fill_rates(rows)
    if config.csv_path is not None:
        write_csv(rows_to_frame(rows, with_h2='h2' in problem.norms), config.csv_path)
    if config.svg_path is not None:
        emit_plot(rows, config.svg_path, title=f"{problem.get_name()} on {config.grid} grids")
    return rows


def run_complex_check(
    grid: str,
    n: int,
    magnitude: float = None,
    seed: int = 1,
    pattern: str = 'checkerboard',
    corrupt_div: bool = False
) -> ComplexReport:
    """All complex checks, including the commuting diagram and the stream-function route."""
    mesh = GridFactory.build(grid, n, magnitude, seed, pattern)
    return check_exact_sequence(
        mesh,
        strict=False,
        checks=[check_type.value() for check_type in CheckType],
        div_hook=zero_largest_entry if corrupt_div else None,
        phi=bubble(),
        velocity=quadratic_velocity(),
        forcing=stokes_solution().forcing
    )


def infsup_constant(mesh: Mesh) -> tuple[float, int, int]:
    V = build_dofmap(mesh, 'qltz0', components=2)
    W = build_dofmap(mesh, 'pressure')
    gamma = estimate_infsup(assemble_stiffness(mesh, V), assemble_div(mesh, V, W),
                            assemble_pressure_mass(mesh, W), assemble_pressure_mean(mesh, W))
    return gamma, V.dim, W.dim - 1


def run_infsup(
    levels: list[int],
    grid: str = 'quad',
    magnitude: float = None,
    seed: int = 1,
    pattern: str = 'checkerboard',
    csv_path: Path = None
) -> pd.DataFrame:
    records = []
    for index, n in enumerate(levels):
        mesh = GridFactory.build(grid, n, magnitude, seed + index, pattern)
        gamma, dof_u, dof_p = infsup_constant(mesh)
        records.append({'n': n, 'h': 1.0 / n, 'dof_u': dof_u, 'dof_p': dof_p, 'gamma': gamma})
        logger.info(f"inf-sup n={n}: gamma_h = {gamma:.6f}")

    frame = pd.DataFrame(records, columns=['n', 'h', 'dof_u', 'dof_p', 'gamma'])
    frame['ratio'] = frame['gamma'] / frame['gamma'].shift(1)
    if len(frame):
        logger.info(f"inf-sup min gamma_h = {frame['gamma'].min():.6f}, "
                    f"min ratio = {np.nanmin(frame['ratio'].to_numpy(), initial=np.inf):.4f}")
    if csv_path is not None:
        write_csv(frame, csv_path)
    return frame

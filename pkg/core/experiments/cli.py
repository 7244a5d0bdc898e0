"""
Command-line driver.

    fem convergence --problem P --grid G --levels 4,8,16,32 [--perturb M --seed S] --csv out.csv [--svg out.svg]
                    [--export-mm DIR]
    fem complex-check --grid G --n N [--perturb M --seed S --pattern P] [--json]
    fem infsup --levels 4,8,16 [--grid G --perturb M --seed S --csv out.csv]
    fem mesh gen --grid G --n N [--pattern P --perturb M --seed S] FILE
    fem mesh info FILE
    fem list
"""

import argparse
import json
import sys

from core import logger
from core.elements.element_factory import ElementFactory
from core.errors import FemError
from core.mesh.generators import MIXED_PATTERNS
from core.mesh.geometry import shape_regularity
from core.mesh.grid_factory import GridFactory, GridType
from core.mesh.mesh_io import read_mesh, write_mesh
from core.stokes_complex import CheckFactory
from .experiment_config import ExperimentConfig
from .problem_factory import ProblemFactory
from .runner import rows_to_frame, run_complex_check, run_convergence, run_infsup

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _levels(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must be comma-separated integers, got {text!r}")


def _add_grid_options(parser: argparse.ArgumentParser, default_grid: str = GridType.QUAD.value):
    parser.add_argument('--grid', default=default_grid, choices=[g.value for g in GridType])
    parser.add_argument('--perturb', type=float, default=None, help="vertex perturbation magnitude")
    parser.add_argument('--seed', type=int, default=1)
    parser.add_argument('--pattern', default='checkerboard', choices=MIXED_PATTERNS,
                        help="triangle split pattern for mixed grids")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='fem', description="Nonconforming Stokes complex on quadrilateral grids")
    commands = parser.add_subparsers(dest='command', required=True)

    convergence = commands.add_parser('convergence', help="refinement study with a manufactured solution")
    convergence.add_argument('--problem', required=True, choices=[p['id'] for p in ProblemFactory.get_available_problems()])
    _add_grid_options(convergence)
    convergence.add_argument('--levels', type=_levels, default=[4, 8, 16, 32])
    convergence.add_argument('--csv', default=None)
    convergence.add_argument('--svg', default=None)
    convergence.add_argument('--export-mm', default=None, metavar='DIR',
                             help="write each level's assembled system in Matrix Market format to DIR")

    complex_check = commands.add_parser('complex-check', help="verify the discrete Stokes complex")
    _add_grid_options(complex_check)
    complex_check.add_argument('--n', type=int, default=2)
    complex_check.add_argument('--json', action='store_true', help="print the report as JSON")
    complex_check.add_argument('--corrupt-div', action='store_true', help=argparse.SUPPRESS)

    infsup = commands.add_parser('infsup', help="tabulate the discrete inf-sup constant")
    _add_grid_options(infsup)
    infsup.add_argument('--levels', type=_levels, default=[4, 8, 16])
    infsup.add_argument('--csv', default=None)

    mesh = commands.add_parser('mesh', help="generate or inspect mesh files")
    mesh_commands = mesh.add_subparsers(dest='mesh_command', required=True)
    gen = mesh_commands.add_parser('gen', help="write a generated grid")
    _add_grid_options(gen)
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('file')
    info = mesh_commands.add_parser('info', help="print counts and quality of a mesh file")
    info.add_argument('file')

    commands.add_parser('list', help="list problems, grids, elements and checks")
    return parser


def _convergence(args) -> int:
    config = ExperimentConfig(problem=args.problem, grid=args.grid, levels=args.levels, magnitude=args.perturb,
                              seed=args.seed, pattern=args.pattern, csv_path=args.csv, svg_path=args.svg,
                              export_dir=args.export_mm)
    rows = run_convergence(config)
    print(rows_to_frame(rows, with_h2=config.problem == 'biharmonic').to_string(index=False))
    return EXIT_OK


def _complex_check(args) -> int:
    report = run_complex_check(args.grid, args.n, args.perturb, args.seed, args.pattern, args.corrupt_div)
    print(report.to_json() if args.json else report.to_text())
    if report.passed:
        return EXIT_OK
    failure = report.first_failure()
    print(f"FAILED: {failure.check_id}: {failure.message}", file=sys.stderr)
    return EXIT_FAILED


def _infsup(args) -> int:
    frame = run_infsup(args.levels, args.grid, args.perturb, args.seed, args.pattern, args.csv)
    print(frame.to_string(index=False))
    return EXIT_OK


def _mesh(args) -> int:
    if args.mesh_command == 'gen':
        mesh = GridFactory.build(args.grid, args.n, args.perturb, args.seed, args.pattern)
        write_mesh(mesh, args.file)
        print(f"wrote {mesh} to {args.file}")
        return EXIT_OK

    mesh = read_mesh(args.file)
    counts = mesh.counts()
    print(", ".join(f"{key}={value}" for key, value in counts.items()))
    euler = counts['F'] + counts['X'] == counts['E'] + 1
    print(f"Euler F + X = E + 1: {'yes' if euler else 'no'}")
    if mesh.n_quads:
        worst = max(shape_regularity(mesh.cells[k].frame) for k in mesh.quad_indices)
        print(f"max shape regularity R_Q: {worst:.6g}")
    print(f"h = {mesh.h:.6g}, area = {mesh.area:.12g}")
    return EXIT_OK


def _list(args) -> int:
    listing = {
        'problems': ProblemFactory.get_available_problems(),
        'grids': GridFactory.get_available_grids(),
        'elements': ElementFactory.get_available_elements(),
        'checks': CheckFactory.get_available_checks()
    }
    print(json.dumps(listing, indent=2))
    return EXIT_OK


HANDLERS = {
    'convergence': _convergence,
    'complex-check': _complex_check,
    'infsup': _infsup,
    'mesh': _mesh,
    'list': _list,
}


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except FemError as err:
        logger.exception(f"fem {args.command} failed")
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR

"""
Saddle-point solve for the discrete Stokes problem.

The zero-mean pressure constraint enters as one extra multiplier row, so the
system reads

    [ A   B^T  0 ] [u]   [f]
    [ B   0    m ] [p] = [0]
    [ 0   m^T  0 ] [l]   [0]

with m_i = int q_i. The multiplier l vanishes for constrained velocities.
"""

from pathlib import Path

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import minres, splu

from core import logger
from core.assembly.sparse_system import SparseSystem
from core.config import FemConfig
from core.errors import NoConvergence, RankDeficient
from core.spaces.dofmap import DofMap
from core.spaces.fe_function import FeFunction
from .solve_report import SolveReport
from .spd import REFINEMENT_STEPS, backward_error


def kkt_matrix(A, B, mean: np.ndarray) -> sp.csc_matrix:
    m = sp.csr_matrix(np.asarray(mean, dtype=float).reshape(-1, 1))
    n_u = A.shape[0]
    return sp.bmat([
        [A, B.T, None],
        [B, None, m],
        [sp.csr_matrix((1, n_u)), m.T, None]
    ], format='csc')


def stokes_system(A, B, mean: np.ndarray, f_vec: np.ndarray) -> SparseSystem:
    """The bordered KKT system with `mean` as its constraint row."""
    mean = np.asarray(mean, dtype=float)
    rhs = np.concatenate((np.asarray(f_vec, dtype=float), np.zeros(B.shape[0] + 1)))
    return SparseSystem(kkt_matrix(A, B, mean), rhs=rhs, constraint=mean)


def _blockwise(A, B, mean, u, p, multiplier, f_vec) -> tuple[float, float]:
    momentum = A @ u + B.T @ p - f_vec
    divergence = B @ u + multiplier * mean
    return float(np.linalg.norm(momentum)), float(np.linalg.norm(divergence))


def _direct(K: sp.csc_matrix, rhs: np.ndarray, tol: float) -> tuple[np.ndarray, dict]:
    try:
        lu = splu(K, permc_spec='COLAMD')
    except RuntimeError as err:
        raise RankDeficient(f"KKT matrix is singular: {err}") from err

    x = lu.solve(rhs)
    steps = 0
    norm_rhs = np.linalg.norm(rhs)
    while steps < REFINEMENT_STEPS and np.linalg.norm(K @ x - rhs) > tol * norm_rhs:
        x = x + lu.solve(rhs - K @ x)
        steps += 1
    if not np.all(np.isfinite(x)):
        raise RankDeficient("KKT solve produced non-finite values")
    return x, {'nnz_factor': int(lu.L.nnz + lu.U.nnz), 'refinement_steps': steps}


def _iterative(K: sp.csc_matrix, rhs: np.ndarray, tol: float) -> tuple[np.ndarray, dict]:
    iterations = []
    x, info = minres(K, rhs, rtol=tol, maxiter=20 * K.shape[0], callback=lambda xk: iterations.append(1))
    if info != 0:
        raise NoConvergence(f"MINRES stopped with code {info} after {len(iterations)} iterations")
    return x, {'iterations': len(iterations)}


def solve_stokes(
    A,
    B,
    mean: np.ndarray,
    f_vec: np.ndarray,
    tol: float = None,
    velocity_space: DofMap = None,
    pressure_space: DofMap = None,
    export_path: str | Path = None
):
    """
    Solve the constrained Stokes system. A is the velocity stiffness on the
    constrained space, B the divergence matrix into the full pressure space
    and `mean` the pressure integrals. With `export_path` the KKT system is
    also written in Matrix Market format.

    Returns (u, p, report). u and p are FeFunctions when the spaces are
    given, coefficient vectors otherwise.
    """
    config = FemConfig()
    tol = config.solver_tolerance if tol is None else tol
    A = sp.csr_matrix(A)
    B = sp.csr_matrix(B)
    mean = np.asarray(mean, dtype=float)
    f_vec = np.asarray(f_vec, dtype=float)
    n_u, n_p = A.shape[0], B.shape[0]

    if B.shape[1] != n_u or mean.shape != (n_p,) or f_vec.shape != (n_u,):
        raise ValueError(f"inconsistent Stokes blocks: A {A.shape}, B {B.shape}, "
                         f"mean {mean.shape}, f {f_vec.shape}")

    system = stokes_system(A, B, mean, f_vec)
    if export_path is not None:
        written = system.to_matrix_market(export_path)
        logger.info(f"Exported Stokes system to {', '.join(str(path) for path in written)}")

    if not np.any(f_vec):
        u, p = np.zeros(n_u), np.zeros(n_p)
        report = SolveReport(np.zeros(n_u + n_p), 0.0, 'trivial')
    else:
        K, rhs = system.matrix, system.rhs
        with logger.timed(f"Stokes solve with {n_u} velocity and {n_p} pressure unknowns"):
            if K.shape[0] <= config.direct_solver_max_dofs:
                x, stats = _direct(K, rhs, tol)
                method = 'splu'
            else:
                x, stats = _iterative(K, rhs, tol)
                method = 'minres'

        u, p, multiplier = x[:n_u], x[n_u:n_u + n_p], x[-1]
        norm_rhs = np.linalg.norm(f_vec)
        momentum, divergence = _blockwise(A, B, mean, u, p, multiplier, f_vec)
        stats.update({'momentum_residual': momentum / norm_rhs,
                      'divergence_residual': divergence / norm_rhs,
                      'multiplier': float(multiplier)})
        residual = max(momentum, divergence) / norm_rhs

        if residual > tol:
            error = backward_error(K, x, rhs)
            stats['backward_error'] = error
            if error > tol:
                raise NoConvergence(f"KKT residual {residual:.3e} exceeds {tol:.1e}")
            logger.warning(f"KKT residual {residual:.3e} above {tol:.1e}; backward error {error:.3e}")

        report = SolveReport(x[:n_u + n_p], residual, method, stats)
        logger.debug(f"Stokes solve done: {report}")

    if velocity_space is not None and pressure_space is not None:
        return FeFunction(velocity_space, u), FeFunction(pressure_space, p), report
    return u, p, report

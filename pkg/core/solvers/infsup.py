import numpy as np
import scipy.sparse as sp
from scipy.linalg import LinAlgError, eigh, null_space
from scipy.sparse.linalg import LinearOperator, lobpcg, splu, spsolve

from core import logger
from core.config import FemConfig
from core.errors import EigFailure

LOBPCG_SEED = 20240601


def _schur_dense(lu, B: sp.csr_matrix) -> np.ndarray:
    """B A^-1 B^T as a dense matrix."""
    X = lu.solve(B.T.toarray())
    S = B @ X
    return 0.5 * (S + S.T)


def _dense(lu, B, M_p, mean) -> float:
    Z = null_space(mean[None, :])
    if Z.shape[1] == 0:
        raise EigFailure("no zero-mean pressures to test")
    S = Z.T @ _schur_dense(lu, B) @ Z
    M = Z.T @ M_p.toarray() @ Z
    try:
        eigenvalues = eigh(S, M, eigvals_only=True, subset_by_index=[0, 0])
    except LinAlgError as err:
        raise EigFailure(f"dense eigensolve failed: {err}") from err
    return float(eigenvalues[0])


def _iterative(lu, B, M_p, mean, tol: float) -> float:
    n_p = B.shape[0]
    schur = LinearOperator((n_p, n_p), matvec=lambda q: B @ lu.solve(B.T @ q), dtype=float)
    constant = spsolve(M_p.tocsc(), mean).reshape(-1, 1)
    X = np.random.default_rng(LOBPCG_SEED).standard_normal((n_p, 1))
    try:
        eigenvalues, _ = lobpcg(schur, X, B=M_p, Y=constant, tol=tol, maxiter=1000, largest=False)
    except (LinAlgError, ValueError) as err:
        raise EigFailure(f"LOBPCG failed: {err}") from err
    if not np.all(np.isfinite(eigenvalues)):
        raise EigFailure("LOBPCG returned non-finite eigenvalues")
    return float(eigenvalues[0])


def estimate_infsup(A, B, M_p, mean, dense_max: int = None) -> float:
    """
    Discrete inf-sup constant sqrt(lambda_min) of B A^-1 B^T q = lambda M_p q
    over zero-mean pressures (m . q = 0).
    """
    config = FemConfig()
    dense_max = config.dense_infsup_max_dofs if dense_max is None else dense_max
    A = sp.csc_matrix(A)
    B = sp.csr_matrix(B)
    M_p = sp.csr_matrix(M_p)
    mean = np.asarray(mean, dtype=float)

    if A.shape[0] == 0:
        raise EigFailure("empty velocity space")
    try:
        lu = splu(A)
    except RuntimeError as err:
        raise EigFailure(f"velocity stiffness is singular: {err}") from err

    method = 'dense' if B.shape[0] <= dense_max else 'lobpcg'
    with logger.timed(f"inf-sup eigen-solve ({method}, {B.shape[0]} pressures)"):
        if method == 'dense':
            smallest = _dense(lu, B, M_p, mean)
        else:
            smallest = _iterative(lu, B, M_p, mean, tol=np.sqrt(config.solver_tolerance))

    gamma = float(np.sqrt(max(smallest, 0.0)))
    logger.debug(f"inf-sup ({method}): lambda_min={smallest:.6e}, gamma={gamma:.6f}")
    return gamma

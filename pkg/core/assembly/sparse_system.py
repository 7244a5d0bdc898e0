from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse as sp


class TripletBuilder:
    """Collects (row, col, value) triplets from per-cell scatters."""

    def __init__(self, shape: tuple[int, int]):
        self.shape = shape
        self._rows: list[np.ndarray] = []
        self._cols: list[np.ndarray] = []
        self._vals: list[np.ndarray] = []

    def add(self, rows: np.ndarray, cols: np.ndarray, block: np.ndarray):
        """Scatter a local block, skipping eliminated (-1) slots."""
        rmask = rows >= 0
        cmask = cols >= 0
        if not rmask.any() or not cmask.any():
            return
        r = rows[rmask]
        c = cols[cmask]
        b = block[np.ix_(rmask, cmask)]
        rr, cc = np.meshgrid(r, c, indexing='ij')
        self._rows.append(rr.ravel())
        self._cols.append(cc.ravel())
        self._vals.append(b.ravel())

    def tocsr(self) -> sp.csr_matrix:
        if not self._rows:
            return sp.csr_matrix(self.shape)
        matrix = sp.coo_matrix(
            (np.concatenate(self._vals), (np.concatenate(self._rows), np.concatenate(self._cols))),
            shape=self.shape
        ).tocsr()
        matrix.sum_duplicates()
        matrix.sort_indices()
        return matrix


@dataclass
class SparseSystem:
    """An assembled linear system with an optional mean-value constraint row."""
    matrix: sp.spmatrix
    rhs: np.ndarray = None
    constraint: np.ndarray = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        if self.matrix.nnz == 0:
            return True
        scale = abs(self.matrix).max()
        return abs(self.matrix - self.matrix.T).max() <= tol * scale

    def to_matrix_market(self, path: str | Path) -> list[Path]:
        """
        Write the matrix to `path`. The right-hand side and the constraint, when
        present, go next to it as <stem>_rhs.mtx and <stem>_constraint.mtx
        column vectors. Returns the written paths.
        """
        path = Path(path)
        scipy.io.mmwrite(str(path), sp.coo_matrix(self.matrix), comment="QuadStokes assembled matrix",
                         symmetry='general')
        written = [path]
        for name, vector in (('rhs', self.rhs), ('constraint', self.constraint)):
            if vector is None:
                continue
            target = path.with_name(f"{path.stem}_{name}.mtx")
            scipy.io.mmwrite(str(target), np.asarray(vector, dtype=float).reshape(-1, 1))
            written.append(target)
        return written

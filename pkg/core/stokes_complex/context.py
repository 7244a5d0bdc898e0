"""
Shared state of one complex verification: the constrained spaces on a mesh
and the operators between them, computed on first use.
"""

from functools import cached_property
from typing import Callable

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from core import logger
from core.assembly import assemble_div, assemble_rot
from core.config import FemConfig
from core.mesh.mesh import Mesh
from core.spaces.dofmap import DofMap, build_dofmap
from core.spaces.fields import Field
from .curl import curl_matrix


def numerical_rank(singular_values: np.ndarray, threshold: float) -> int:
    if len(singular_values) == 0 or singular_values[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular_values > threshold * singular_values[0]))


class ComplexContext:
    def __init__(
        self,
        mesh: Mesh,
        div_hook: Callable[[sp.csr_matrix], sp.csr_matrix] = None,
        phi: Field = None,
        velocity: Field = None,
        forcing: Callable = None
    ):
        self.mesh = mesh
        self.div_hook = div_hook
        self.phi = phi
        self.velocity = velocity
        self.forcing = forcing
        self.threshold = FemConfig().rank_threshold
        self.defects: dict[str, float] = {}

        self.M: DofMap = build_dofmap(mesh, 'morley0')
        self.V: DofMap = build_dofmap(mesh, 'qltz0', components=2)
        self.W: DofMap = build_dofmap(mesh, 'pressure0')

    @cached_property
    def div(self) -> sp.csr_matrix:
        B = assemble_div(self.mesh, self.V, self.W)
        if self.div_hook is not None:
            logger.warning("divergence matrix modified by a test hook")
            B = sp.csr_matrix(self.div_hook(B))
        return B

    @cached_property
    def rot(self) -> sp.csr_matrix:
        return assemble_rot(self.mesh, self.V, self.W)

    @cached_property
    def curl(self) -> sp.csr_matrix:
        return curl_matrix(self.mesh, self.M, self.V)

    @cached_property
    def div_singular_values(self) -> np.ndarray:
        return scipy.linalg.svd(self.div.toarray(), compute_uv=False)

    @cached_property
    def rank_div(self) -> int:
        return numerical_rank(self.div_singular_values, self.threshold)

    @cached_property
    def rank_rot(self) -> int:
        return numerical_rank(scipy.linalg.svd(self.rot.toarray(), compute_uv=False), self.threshold)

    @cached_property
    def rank_curl(self) -> int:
        return numerical_rank(scipy.linalg.svd(self.curl.toarray(), compute_uv=False), self.threshold)

    @property
    def kernel_dim(self) -> int:
        return self.V.dim - self.rank_div

    @property
    def dimensions(self) -> dict:
        return {'M_h0': self.M.dim, 'V_h0': self.V.dim, 'W_h0': self.W.dim}

    @property
    def expected_kernel_dim(self) -> int:
        return self.mesh.n_interior_edges + self.mesh.n_interior_vertices

    def mesh_summary(self) -> dict:
        summary = self.mesh.counts()
        summary['h'] = round(self.mesh.h, 12)
        summary['simply_connected'] = self.mesh.is_simply_connected
        return summary

from typing import Callable, Sequence

import scipy.sparse as sp

from core import logger
from core.errors import CheckFailed
from core.mesh.mesh import Mesh
from core.result import ComplexReport, ReportStatus
from core.spaces.fields import Field
from .base_check import BaseCheck
from .check_factory import CheckFactory
from .context import ComplexContext


def check_exact_sequence(
    mesh: Mesh,
    strict: bool = True,
    checks: Sequence[BaseCheck | str] = None,
    div_hook: Callable[[sp.csr_matrix], sp.csr_matrix] = None,
    phi: Field = None,
    velocity: Field = None,
    forcing: Callable = None
) -> ComplexReport:
    """
    Verify 0 -> M_h0 -> V_h0 -> W_h0 -> 0 on one mesh. Runs the exactness
    checks by default; `checks` selects others by instance or id. With
    strict=True the first failing check raises CheckFailed carrying the
    full report.
    """
    if checks is None:
        checks = CheckFactory.exactness_checks()
    checks = [CheckFactory.from_id(c) if isinstance(c, str) else c for c in checks]

    context = ComplexContext(mesh, div_hook=div_hook, phi=phi, velocity=velocity, forcing=forcing)
    with logger.timed(f"Checking discrete Stokes complex on {mesh}"):
        report = ComplexReport(ReportStatus.SUCCESS, context.mesh_summary(), context.dimensions,
                               rank_div=context.rank_div, kernel_dim=context.kernel_dim)
        for check in checks:
            result = check.run(context)
            report.add_check(result)
            logger.debug(f"{result!r}: {result.message}")
    report.defects = dict(context.defects)

    logger.assert_true(report.consistent, "rank and kernel dimension do not add up to dim V_h0")
    failure = report.first_failure()
    if failure is not None:
        logger.warning(f"complex check failed: {failure.check_id}: {failure.message}")
        if strict:
            raise CheckFailed(failure.check_id, failure.message, report=report)
    return report


def zero_largest_entry(B: sp.csr_matrix) -> sp.csr_matrix:
    """Negative control: zero the largest-magnitude entry of the divergence matrix."""
    dense = B.toarray()
    i, j = divmod(int(abs(dense).argmax()), dense.shape[1])
    dense[i, j] = 0.0
    return sp.csr_matrix(dense)

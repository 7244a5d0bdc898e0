import math
from dataclasses import asdict, dataclass

# Stable CSV schema; biharmonic runs append H2_COLUMNS
CSV_COLUMNS = ['n', 'h', 'dof_u', 'dof_p', 'err_l2', 'err_h1', 'err_p_l2', 'rate_l2', 'rate_h1', 'rate_p']
H2_COLUMNS = ['err_h2', 'rate_h2']


@dataclass
class ConvergenceRow:
    n: int
    h: float
    dof_u: int
    dof_p: int | None = None
    err_l2: float | None = None
    err_h1: float | None = None
    err_p_l2: float | None = None
    rate_l2: float | None = None
    rate_h1: float | None = None
    rate_p: float | None = None
    err_h2: float | None = None
    rate_h2: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def observed_rate(coarse_error: float, fine_error: float, coarse_h: float, fine_h: float) -> float | None:
    """log(e_coarse / e_fine) / log(h_coarse / h_fine)"""
    if coarse_error is None or fine_error is None or coarse_error <= 0.0 or fine_error <= 0.0:
        return None
    return math.log(coarse_error / fine_error) / math.log(coarse_h / fine_h)


def fill_rates(rows: list[ConvergenceRow]) -> list[ConvergenceRow]:
    for previous, row in zip(rows, rows[1:]):
        row.rate_l2 = observed_rate(previous.err_l2, row.err_l2, previous.h, row.h)
        row.rate_h1 = observed_rate(previous.err_h1, row.err_h1, previous.h, row.h)
        row.rate_p = observed_rate(previous.err_p_l2, row.err_p_l2, previous.h, row.h)
        row.rate_h2 = observed_rate(previous.err_h2, row.err_h2, previous.h, row.h)
    return rows

from .infsup import estimate_infsup
from .solve_report import SolveReport
from .spd import relative_residual, solve_spd
from .stokes import kkt_matrix, solve_stokes, stokes_system

from .base_problem import BaseProblem, LevelSolution
from .convergence_row import CSV_COLUMNS, H2_COLUMNS, ConvergenceRow, fill_rates, observed_rate
from .experiment_config import ExperimentConfig
from .plot import emit_plot
from .problem_factory import ProblemFactory, ProblemType
from .runner import rows_to_frame, run_complex_check, run_convergence, run_infsup

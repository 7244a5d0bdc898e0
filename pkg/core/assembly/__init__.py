from .forms import (
    assemble_curl_load, assemble_div, assemble_hessian, assemble_load, assemble_pressure_mass,
    assemble_pressure_mean, assemble_rot, assemble_stiffness
)
from .norms import Norm, divergence_norm, error_norm
from .sparse_system import SparseSystem, TripletBuilder

from .dofmap import DofMap, SpaceKind, build_dofmap
from .fe_function import FeFunction, broken_curl, broken_div, broken_grad, broken_hessian, evaluate
from .fields import Field, curl_of
from .interpolation import interpolate_morley, interpolate_qltz_scalar, interpolate_qltz_vector, l2_project_pressure

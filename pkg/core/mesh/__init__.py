from .geometry import AffineChart, QuadFrame, quad_frame, xi_eta, shape_regularity, triangle_chart
from .mesh import Mesh, Cell, Edge, CellKind
from .generators import generate_structured_quads, generate_perturbed_quads, generate_mixed
from .grid_factory import GridType, GridFactory
from .mesh_io import read_mesh, write_mesh

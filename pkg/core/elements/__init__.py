from .base_element import BaseElement
from .element_factory import ElementFactory, ElementType
from .local_basis import LocalBasis
from .morley import quad_morley_basis, tri_morley_basis
from .qltz import qltz_eval, step2_matrix
from .quadrature import QuadratureRule, cell_rule, edge_rule, integrate_cell, integrate_edge
from .triangle import tri_p1nc_basis

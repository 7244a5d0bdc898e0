from enum import Enum
from typing import Any, Dict, List

from core.mesh.mesh import CellKind
from .base_element import BaseElement
from .morley import QuadMorleyElement, TriMorleyElement
from .pressure import PressureP0Element, PressureP1Element
from .qltz import QltzElement
from .triangle import TriP1ncElement


class ElementType(Enum):
    QLTZ = QltzElement
    QUAD_MORLEY = QuadMorleyElement
    TRI_P1NC = TriP1ncElement
    TRI_MORLEY = TriMorleyElement
    PRESSURE_P1 = PressureP1Element
    PRESSURE_P0 = PressureP0Element


class ElementFactory:
    @staticmethod
    def from_id(element_id: str) -> BaseElement:
        for element_type in ElementType:
            if element_type.value.get_id() == element_id:
                return element_type.value()
        raise ValueError(f"Unsupported element: {element_id}")

    @staticmethod
    def for_cell(family: str, cell_kind: CellKind) -> BaseElement:
        """Element of a space family ('qltz', 'morley', 'pressure') on one cell kind."""
        for element_type in ElementType:
            element = element_type.value
            if element.family == family and element.cell_kind == cell_kind:
                return element()
        raise ValueError(f"Unsupported element family: {family} on {cell_kind.value}")

    @staticmethod
    def get_available_elements() -> List[Dict[str, Any]]:
        return [
            {
                'id': element_type.value.get_id(),
                'name': element_type.value.get_name()
            }
            for element_type in ElementType
        ]

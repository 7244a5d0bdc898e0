from enum import Enum
from typing import Any, Dict, List

from .base_check import BaseCheck
from .commutativity import CommutingCurlCheck, CommutingDivCheck
from .exactness_checks import (
    CurlInKernelCheck, CurlSpansKernelCheck, DivSurjectiveCheck, KernelDimensionCheck, RotSurjectiveCheck,
    SimplyConnectedCheck
)
from .stream import StreamFunctionCheck


class CheckType(Enum):
    DIV_SURJECTIVE = DivSurjectiveCheck
    KERNEL_DIMENSION = KernelDimensionCheck
    CURL_IN_KERNEL = CurlInKernelCheck
    CURL_SPANS_KERNEL = CurlSpansKernelCheck
    ROT_SURJECTIVE = RotSurjectiveCheck
    SIMPLY_CONNECTED = SimplyConnectedCheck
    COMMUTING_CURL = CommutingCurlCheck
    COMMUTING_DIV = CommutingDivCheck
    STREAM_FUNCTION = StreamFunctionCheck


# Checks that need nothing beyond the mesh, in reporting order
EXACTNESS_CHECKS = (
    CheckType.DIV_SURJECTIVE,
    CheckType.KERNEL_DIMENSION,
    CheckType.CURL_IN_KERNEL,
    CheckType.CURL_SPANS_KERNEL,
    CheckType.ROT_SURJECTIVE,
    CheckType.SIMPLY_CONNECTED,
)


class CheckFactory:
    @staticmethod
    def from_id(check_id: str) -> BaseCheck:
        for check_type in CheckType:
            if check_type.value.get_id() == check_id:
                return check_type.value()
        raise ValueError(f"Unsupported check: {check_id}")

    @staticmethod
    def exactness_checks() -> List[BaseCheck]:
        return [check_type.value() for check_type in EXACTNESS_CHECKS]

    @staticmethod
    def get_available_checks() -> List[Dict[str, Any]]:
        return [
            {
                'id': check_type.value.get_id(),
                'name': check_type.value.get_name()
            }
            for check_type in CheckType
        ]

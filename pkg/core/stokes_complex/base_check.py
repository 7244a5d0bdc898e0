from abc import ABC, abstractmethod

from core.result import CheckResult
from .context import ComplexContext


class BaseCheck(ABC):
    @staticmethod
    @abstractmethod
    def get_id() -> str:
        """IMPORTANT: Stable identifier used in APIs. Do not change once set."""
        pass

    @staticmethod
    @abstractmethod
    def get_name() -> str:
        pass

    @abstractmethod
    def run(self, context: ComplexContext) -> CheckResult:
        pass

    def result(self, passed: bool, message: str, value=None, expected=None) -> CheckResult:
        return CheckResult(self.get_id(), passed, message, value, expected)

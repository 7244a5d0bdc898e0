import json
from enum import Enum


class ReportStatus(Enum):
    SUCCESS = "success"
    PARTIAL = "partial"
    FAILED = "failed"
    ERROR = "error"


class CheckResult:
    def __init__(self, check_id: str, passed: bool, message: str, value=None, expected=None):
        self.check_id = check_id
        self.passed = bool(passed)
        self.message = message
        self.value = value
        self.expected = expected

    def to_dict(self) -> dict:
        result_dict = {
            'check': self.check_id,
            'passed': self.passed,
            'message': self.message
        }
        if self.value is not None:
            result_dict['value'] = self.value
        if self.expected is not None:
            result_dict['expected'] = self.expected
        return result_dict

    def __repr__(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return f"CheckResult({self.check_id}={state})"


class ComplexReport:
    """Outcome of the discrete Stokes complex verification on one mesh."""

    def __init__(
        self,
        status: ReportStatus,
        mesh_summary: dict,
        dimensions: dict,
        rank_div: int,
        kernel_dim: int,
        checks: list[CheckResult] = None,
        defects: dict = None
    ):
        if not isinstance(status, ReportStatus):
            raise TypeError(f"status must be ReportStatus enum, got {type(status)}")

        self.status = status
        self.mesh_summary = mesh_summary
        self.dimensions = dimensions
        self.rank_div = int(rank_div)
        self.kernel_dim = int(kernel_dim)
        self.checks = checks or []
        self.defects = defects or {}

    @property
    def passed(self) -> bool:
        return self.status == ReportStatus.SUCCESS

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def add_check(self, check: CheckResult):
        self.checks.append(check)
        if self.status != ReportStatus.ERROR:
            self.status = self._derive_status()

    def _derive_status(self) -> ReportStatus:
        passed = sum(c.passed for c in self.checks)
        if passed == len(self.checks):
            return ReportStatus.SUCCESS
        if passed == 0:
            return ReportStatus.FAILED
        return ReportStatus.PARTIAL

    @property
    def consistent(self) -> bool:
        """kernel dim + rank = dim V_h0"""
        return self.kernel_dim + self.rank_div == self.dimensions.get('V_h0', self.kernel_dim + self.rank_div)

    def to_dict(self) -> dict:
        return {
            'status': self.status.value,
            'mesh': self.mesh_summary,
            'dimensions': self.dimensions,
            'rank_div': self.rank_div,
            'kernel_dim': self.kernel_dim,
            'defects': self.defects,
            'checks': [c.to_dict() for c in self.checks]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = ["Discrete Stokes complex check", "=" * 60]
        lines.append("mesh: " + ", ".join(f"{k}={v}" for k, v in self.mesh_summary.items()))
        for name, dim in self.dimensions.items():
            lines.append(f"dim {name:<10} {dim}")
        lines.append(f"rank div_h    {self.rank_div}")
        lines.append(f"dim ker div_h {self.kernel_dim}")
        for name, defect in self.defects.items():
            lines.append(f"defect {name:<9} {defect:.3e}")
        lines.append("-" * 60)
        for check in self.checks:
            state = "PASS" if check.passed else "FAIL"
            lines.append(f"[{state}] {check.check_id}: {check.message}")
        lines.append("=" * 60)
        lines.append(f"result: {self.status.value}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"ComplexReport(status={self.status.value}, checks={len(self.checks)})"

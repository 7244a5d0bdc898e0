from core.result import CheckResult
from .base_check import BaseCheck
from .check_id import CheckId
from .context import ComplexContext

# Absolute bound on |B C| entries, relative to the operator scales
COMPOSITION_TOLERANCE = 1e-11


def _max_abs(matrix) -> float:
    return float(abs(matrix).max()) if matrix.nnz else 0.0


class DivSurjectiveCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.DIV_SURJECTIVE

    @staticmethod
    def get_name() -> str:
        return "div_h maps V_h0 onto the zero-mean pressures"

    def run(self, context: ComplexContext) -> CheckResult:
        rank, expected = context.rank_div, context.W.dim
        return self.result(rank == expected, f"rank(B) = {rank}, dim W_h0 = {expected}", rank, expected)


class KernelDimensionCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.KERNEL_DIMENSION

    @staticmethod
    def get_name() -> str:
        return "dim ker div_h = E_I + X_I = dim M_h0"

    def run(self, context: ComplexContext) -> CheckResult:
        kernel = context.kernel_dim
        counted = context.expected_kernel_dim
        passed = kernel == counted == context.M.dim
        return self.result(passed, f"dim ker(B) = {kernel}, E_I + X_I = {counted}, dim M_h0 = {context.M.dim}",
                           kernel, counted)


class CurlInKernelCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.CURL_IN_KERNEL

    @staticmethod
    def get_name() -> str:
        return "div_h curl_h = 0 on M_h0"

    def run(self, context: ComplexContext) -> CheckResult:
        defect = _max_abs(context.div @ context.curl)
        scale = max(1.0, _max_abs(context.div) * _max_abs(context.curl))
        return self.result(defect <= COMPOSITION_TOLERANCE * scale, f"max |B C| = {defect:.3e}", defect)


class CurlSpansKernelCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.CURL_SPANS_KERNEL

    @staticmethod
    def get_name() -> str:
        return "curl_h of a basis of M_h0 is a basis of ker div_h"

    def run(self, context: ComplexContext) -> CheckResult:
        rank = context.rank_curl
        passed = rank == context.M.dim == context.kernel_dim
        return self.result(passed, f"rank(C) = {rank}, dim M_h0 = {context.M.dim}, "
                                   f"dim ker(B) = {context.kernel_dim}", rank, context.kernel_dim)


class RotSurjectiveCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.ROT_SURJECTIVE

    @staticmethod
    def get_name() -> str:
        return "rot_h maps V_h0 onto the zero-mean pressures"

    def run(self, context: ComplexContext) -> CheckResult:
        rank, expected = context.rank_rot, context.W.dim
        return self.result(rank == expected, f"rank(R) = {rank}, dim W_h0 = {expected}", rank, expected)


class SimplyConnectedCheck(BaseCheck):
    @staticmethod
    def get_id() -> str:
        return CheckId.SIMPLY_CONNECTED

    @staticmethod
    def get_name() -> str:
        return "domain is simply connected"

    def run(self, context: ComplexContext) -> CheckResult:
        chi = context.mesh.euler_characteristic
        if chi == 1:
            return self.result(True, "F + X = E + 1", chi, 1)
        return self.result(False, f"Euler characteristic {chi}: the dimension identities need topology terms",
                           chi, 1)

"""
Check IDs for the complex verification.
"""


class CheckId:
    """Enum-like class for check IDs."""
    DIV_SURJECTIVE = "div_surjective"
    KERNEL_DIMENSION = "kernel_dimension"
    CURL_IN_KERNEL = "curl_in_kernel"
    CURL_SPANS_KERNEL = "curl_spans_kernel"
    ROT_SURJECTIVE = "rot_surjective"
    SIMPLY_CONNECTED = "simply_connected"
    COMMUTING_CURL = "commuting_curl"
    COMMUTING_DIV = "commuting_div"
    STREAM_FUNCTION = "stream_function"

from .check_factory import CheckFactory, CheckType
from .check_id import CheckId
from .commutativity import check_commutativity
from .context import ComplexContext
from .curl import curl_matrix, curl_morley
from .sequence import check_exact_sequence, zero_largest_entry
from .stream import solve_stream_function

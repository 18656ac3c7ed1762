"""Permutation codes under the Chebyshev distance: DPGP codes, recursively
extended permutation (REP) codes, sequential encoding and decoding."""

from .codec import (
    DecodeResult,
    decode,
    encode_natural,
    encode_sequential,
    heads_from_message,
    message_from_heads,
)
from .dpgp import (
    DpgpDecodeFailure,
    DpgpParams,
    dpgp_decode,
    dpgp_encode,
    dpgp_enumerate,
    dpgp_size,
    is_dpgp_member,
)
from .errors import DomainError, ResourceError, SpecValidationError
from .orderstat import RankSelectSet
from .perm import (
    EPSILON,
    INFINITY,
    HeadSet,
    Interval,
    chebyshev,
    code_min_distance,
    contract,
    extend,
    extend_code,
    headset_min_distance,
    interval_set,
    maximum_interval,
    phi_symbol,
)
from .rep import (
    RepSpec,
    SpecReport,
    c1_headset,
    kloeve_spec,
    optimal_rep_size,
    optimal_spec,
    parse_spec,
    rep_enumerate,
    rep_size,
    validate_spec,
)

__version__ = "0.1.0"

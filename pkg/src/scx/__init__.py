"""State complexity of squares and powers of regular languages."""

from .concat import (
    PairState,
    oracle_concat,
    power_construction,
    reachability_word,
    square_construction,
    yzs_concat,
)
from .dfa import (
    DEFAULT_STATE_LIMIT,
    Dfa,
    DfaError,
    StateLimitError,
    accepts,
    enumerate_language,
    run,
    step,
    validate,
)
from .minimize import equivalent, isomorphic, minimize, trim
from .unary import (
    ChrobakSize,
    EventuallyPeriodicSet,
    chrobak_size,
    from_length_set,
    to_length_set,
    unary_concat,
    unary_power,
    unary_power_size,
)
from .witness import (
    VerificationReport,
    binary_witness,
    expected_square_states,
    expected_unary_power_states,
    unary_cycle_witness,
    verify_square,
    verify_unary,
)

__version__ = "0.1.0"

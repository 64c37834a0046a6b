"""Standard library of encodings"""

from .encodings import (
    TRUE, FALSE, NOT, PHASE, HADAMARD, TENSOR, PI1, PI2, BIG_TENSOR, H2,
    CNOT, DJ1, DJ, Y, IDENTITY, HALF_SQRT2, BUILTINS,
    church, quote, unquote, tensor_of, tensor_chain, tensor_power,
    big_tensor_of, clone_candidate, fixed_point,
    oracle_constant, oracle_balanced_id, deutsch,
)
from .prelude import Prelude, load_prelude, resolve_prelude_path, DEFAULT_PRELUDE_PATH

__all__ = [
    'TRUE', 'FALSE', 'NOT', 'PHASE', 'HADAMARD', 'TENSOR', 'PI1', 'PI2',
    'BIG_TENSOR', 'H2', 'CNOT', 'DJ1', 'DJ', 'Y', 'IDENTITY', 'HALF_SQRT2', 'BUILTINS',
    'church', 'quote', 'unquote', 'tensor_of', 'tensor_chain', 'tensor_power',
    'big_tensor_of', 'clone_candidate', 'fixed_point',
    'oracle_constant', 'oracle_balanced_id', 'deutsch',
    'Prelude', 'load_prelude', 'resolve_prelude_path', 'DEFAULT_PRELUDE_PATH',
]

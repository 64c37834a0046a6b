"""The rewrite system L: redexes, strategies and normalisation"""

from .rules import RuleId, RuleGroup, Redex, format_path, parse_path
from .system import (
    RewriteSystem, DEFAULT_SYSTEM,
    enumerate_redexes, apply_redex, is_normal, local_redexes,
)
from .strategies import Strategy, DeterministicStrategy, RandomSeededStrategy, StrategyFactory
from .engine import (
    DEFAULT_MAX_DEPTH, OutcomeStatus, NormalizeOutcome, TraceRecord, Trace,
    normalize, normalize_with_strategy, trace, step, weight_of,
)

__all__ = [
    'RuleId', 'RuleGroup', 'Redex', 'format_path', 'parse_path',
    'RewriteSystem', 'DEFAULT_SYSTEM',
    'enumerate_redexes', 'apply_redex', 'is_normal', 'local_redexes',
    'Strategy', 'DeterministicStrategy', 'RandomSeededStrategy', 'StrategyFactory',
    'DEFAULT_MAX_DEPTH', 'OutcomeStatus', 'NormalizeOutcome', 'TraceRecord', 'Trace',
    'normalize', 'normalize_with_strategy', 'trace', 'step', 'weight_of',
]

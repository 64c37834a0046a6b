"""
Fueled normalisation and tracing
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterator, List, Optional

from .rules import Redex, RuleId, format_path
from .strategies import DeterministicStrategy, Strategy
from .system import DEFAULT_SYSTEM, RewriteSystem
from ..logger import get_logger
from ..scalars import ExactScalar, Scalar
from ..terms import Scaled, Sum, Term

logger = get_logger('engine')

# Runs stop as FuelExhausted once the term grows deeper than this
DEFAULT_MAX_DEPTH = 200


class OutcomeStatus(Enum):
    NORMAL = "Normal"
    FUEL_EXHAUSTED = "FuelExhausted"


@dataclass(frozen=True)
class NormalizeOutcome:
    status: OutcomeStatus
    term: Term
    steps: int

    @property
    def is_normal(self) -> bool:
        return self.status is OutcomeStatus.NORMAL

    def to_dict(self, printer: Callable[[Term], str] = str) -> Dict[str, Any]:
        return {
            'status': self.status.value,
            'steps': self.steps,
            'term': printer(self.term),
        }


@dataclass(frozen=True)
class TraceRecord:
    step: int
    rule: RuleId
    path: tuple
    before: Term
    after: Term

    def to_line(self, printer: Callable[[Term], str] = str) -> str:
        return f"{self.step}\t{self.rule.value}\t{format_path(self.path)}\t{printer(self.after)}"

    def to_dict(self, printer: Callable[[Term], str] = str) -> Dict[str, Any]:
        return {
            'step': self.step,
            'rule': self.rule.value,
            'path': format_path(self.path),
            'before': printer(self.before),
            'after': printer(self.after),
        }


@dataclass
class Trace:
    records: List[TraceRecord] = field(default_factory=list)
    outcome: Optional[NormalizeOutcome] = None

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TraceRecord]:
        return iter(self.records)

    def to_lines(self, printer: Callable[[Term], str] = str) -> List[str]:
        """Text format: one tab-separated line per step"""
        return [record.to_line(printer) for record in self.records]

    def to_records(self, printer: Callable[[Term], str] = str) -> List[str]:
        """Machine format: one JSON object per step"""
        return [json.dumps(record.to_dict(printer)) for record in self.records]

    def chains(self) -> bool:
        return all(a.after == b.before for a, b in zip(self.records, self.records[1:]))


def _run(t: Term, fuel: int, strategy: Strategy, system: RewriteSystem,
         on_step: Optional[Callable[[TraceRecord], None]] = None,
         max_depth: int = DEFAULT_MAX_DEPTH) -> NormalizeOutcome:
    if fuel < 0:
        raise ValueError(f"Fuel must be non-negative, got {fuel}")
    term = t
    steps = 0
    while True:
        redexes = system.enumerate_redexes(term)
        if not redexes:
            return NormalizeOutcome(OutcomeStatus.NORMAL, term, steps)
        if steps >= fuel:
            logger.debug(f"Fuel exhausted after {steps} steps")
            return NormalizeOutcome(OutcomeStatus.FUEL_EXHAUSTED, term, steps)
        if term.depth > max_depth:
            logger.info(f"Depth {term.depth} over {max_depth} after {steps} steps")
            return NormalizeOutcome(OutcomeStatus.FUEL_EXHAUSTED, term, steps)
        redex = strategy.choose(term, redexes)
        after = system.apply_redex(term, redex)
        steps += 1
        if on_step is not None:
            on_step(TraceRecord(steps, redex.rule, redex.path, term, after))
        term = after


def normalize(t: Term, fuel: int, system: RewriteSystem = DEFAULT_SYSTEM,
              max_depth: int = DEFAULT_MAX_DEPTH) -> NormalizeOutcome:
    """Normalise with the deterministic strategy"""
    return _run(t, fuel, DeterministicStrategy(), system, max_depth=max_depth)


def normalize_with_strategy(t: Term, fuel: int, strategy: Strategy,
                            system: RewriteSystem = DEFAULT_SYSTEM,
                            max_depth: int = DEFAULT_MAX_DEPTH) -> NormalizeOutcome:
    return _run(t, fuel, strategy, system, max_depth=max_depth)


def trace(t: Term, fuel: int, strategy: Optional[Strategy] = None,
          system: RewriteSystem = DEFAULT_SYSTEM, max_depth: int = DEFAULT_MAX_DEPTH) -> Trace:
    result = Trace()
    outcome = _run(t, fuel, strategy or DeterministicStrategy(), system,
                   on_step=result.records.append, max_depth=max_depth)
    result.outcome = outcome
    return result


def step(t: Term, redex: Redex, system: RewriteSystem = DEFAULT_SYSTEM) -> Term:
    return system.apply_redex(t, redex)


def weight_of(t: Term, u: Term, one: Optional[Scalar] = None) -> Scalar:
    """Total scalar weight with which u occurs as an addend of t"""
    one = one or ExactScalar.one()
    zero = one.zero_like()
    if t == u:
        return one
    if isinstance(t, Scaled):
        return t.scalar * weight_of(t.body, u, one)
    if isinstance(t, Sum):
        total = zero
        for addend in t.addends:
            total = total + weight_of(addend, u, one)
        return total
    return zero

"""
Rule identifiers and redexes of the conditional system L
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple


class RuleGroup(Enum):
    ELEMENTARY = "E"
    FACTORISATION = "F"
    APPLICATION = "A"
    BETA = "B"


class RuleId(Enum):
    PLUS_ZERO = "E-Plus0"
    SCALE_ZERO = "E-Scale0"
    SCALE_ONE = "E-Scale1"
    SCALE_ZERO_VECTOR = "E-ScaleZeroVec"
    SCALE_SCALE = "E-ScaleScale"
    SCALE_SUM = "E-ScaleSum"
    FACTOR_BOTH = "F-FactorBoth"
    FACTOR_ONE = "F-FactorOne"
    FACTOR_NONE = "F-FactorNone"
    DIST_APP_LEFT = "A-DistAppLeft"
    DIST_APP_RIGHT = "A-DistAppRight"
    SCALE_APP_LEFT = "A-ScaleAppLeft"
    SCALE_APP_RIGHT = "A-ScaleAppRight"
    ZERO_APP_LEFT = "A-ZeroAppLeft"
    ZERO_APP_RIGHT = "A-ZeroAppRight"
    BETA = "B-Beta"

    @property
    def group(self) -> RuleGroup:
        return RuleGroup(self.value[0])

    @classmethod
    def parse(cls, text: str) -> "RuleId":
        for rule in cls:
            if rule.value == text:
                return rule
        raise ValueError(f"Unknown rule: {text}. Available: {[r.value for r in cls]}")

    def __str__(self) -> str:
        return self.value


# Strategy preference between groups at equal depth
GROUP_RANK = {
    RuleGroup.ELEMENTARY: 0,
    RuleGroup.FACTORISATION: 1,
    RuleGroup.APPLICATION: 2,
    RuleGroup.BETA: 3,
}

RULE_ORDER = {rule: index for index, rule in enumerate(RuleId)}


def format_path(path: Tuple[int, ...]) -> str:
    """Dot-separated child indices; the root is '-'"""
    return '.'.join(str(index) for index in path) if path else '-'


def parse_path(text: str) -> Tuple[int, ...]:
    if text in ('', '-'):
        return ()
    return tuple(int(part) for part in text.split('.'))


@dataclass(frozen=True)
class Redex:
    """A rule instance at a position; `addends` selects the pair for F rules"""
    path: Tuple[int, ...]
    rule: RuleId
    addends: Optional[Tuple[int, int]] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'path', tuple(self.path))
        is_factorisation = self.rule.group is RuleGroup.FACTORISATION
        if is_factorisation != (self.addends is not None):
            raise ValueError(f"{self.rule} requires addends iff it is a factorisation rule")
        if self.addends is not None:
            i, j = self.addends
            if not 0 <= i < j:
                raise ValueError(f"Addend pair must be ordered, got {self.addends}")

    @property
    def path_text(self) -> str:
        return format_path(self.path)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'path': self.path_text,
            'rule': self.rule.value,
            'addends': list(self.addends) if self.addends else None,
        }

    def __str__(self) -> str:
        pair = f" {self.addends}" if self.addends else ""
        return f"{self.rule.value}@{self.path_text}{pair}"

"""
Redex selection strategies
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

import numpy as np

from .rules import GROUP_RANK, RULE_ORDER, Redex
from ..terms import Lam, Term
from ..logger import get_logger

logger = get_logger('strategies')


class Strategy(ABC):
    """Picks one redex out of the enumerated ones"""

    name: str = "abstract"

    @abstractmethod
    def choose(self, term: Term, redexes: List[Redex]) -> Redex:
        """
        Select the redex to contract next

        Args:
            term: Current term
            redexes: Non-empty result of enumerate_redexes(term)
        """
        pass

    def describe(self) -> Dict[str, Any]:
        return {'name': self.name}


class DeterministicStrategy(Strategy):
    """
    Weak innermost-leftmost

    Redexes outside every abstraction come first; among those the deepest,
    then group E before F before A before B, then the leftmost path.
    """

    name = "deterministic"

    def choose(self, term: Term, redexes: List[Redex]) -> Redex:
        return min(redexes, key=lambda redex: self.priority(term, redex))

    @staticmethod
    def priority(term: Term, redex: Redex):
        under_binder = _under_binder(term, redex.path)
        return (
            under_binder,
            -len(redex.path),
            GROUP_RANK[redex.rule.group],
            redex.path,
            RULE_ORDER[redex.rule],
            redex.addends or (),
        )


class RandomSeededStrategy(Strategy):
    """Uniform choice driven by a seeded numpy generator"""

    name = "random"

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def choose(self, term: Term, redexes: List[Redex]) -> Redex:
        return redexes[int(self.rng.integers(len(redexes)))]

    def describe(self) -> Dict[str, Any]:
        return {'name': self.name, 'seed': self.seed}


def _under_binder(term: Term, path) -> bool:
    node = term
    for index in path:
        if isinstance(node, Lam):
            return True
        node = node.children()[index]
    return False


class StrategyFactory:
    """Factory for redex selection strategies"""

    STRATEGIES = {
        'deterministic': DeterministicStrategy,
        'random': RandomSeededStrategy,
    }

    @classmethod
    def create_strategy(cls, name: str, seed: Optional[int] = None) -> Strategy:
        """
        Create a strategy instance

        Raises:
            ValueError: If strategy name is unknown
        """
        if name not in cls.STRATEGIES:
            raise ValueError(f"Unknown strategy: {name}. "
                             f"Available: {list(cls.STRATEGIES.keys())}")
        if name == 'random':
            strategy = RandomSeededStrategy(seed or 0)
        else:
            strategy = cls.STRATEGIES[name]()
        logger.debug(f"Created {name} strategy")
        return strategy

    @classmethod
    def get_available_strategies(cls) -> List[str]:
        return list(cls.STRATEGIES.keys())

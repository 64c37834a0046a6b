"""
Random term generation
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import Config
from ..logger import get_logger
from ..parser import parse_scalar
from ..scalars import Scalar
from ..terms import App, Lam, Scaled, Term, Var, Zero, make_sum

logger = get_logger('generator')

DEFAULT_SCALAR_POOL = ("0", "1", "-1", "1/2", "sqrt2/2", "i", "omega8")

DEFAULT_WEIGHTS = {
    'zero': 1.0,
    'lambda': 3.0,
    'apply': 3.0,
    'scaled': 2.0,
    'sum': 2.0,
    'variable': 3.0,
}

FREE_NAMES = ('a', 'b', 'c')

# Chance that a sum repeats one of its addends, possibly rescaled
DUPLICATE_ADDEND_RATE = 0.3


@dataclass
class GenConfig:
    """Shape of generated terms"""
    max_depth: int = 5
    scalar_pool: Tuple[Scalar, ...] = field(
        default_factory=lambda: tuple(parse_scalar(text) for text in DEFAULT_SCALAR_POOL))
    weights: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))
    closed_only: bool = True
    seed: int = 0
    self_application_budget: int = 2

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be at least 1, got {self.max_depth}")
        unknown = set(self.weights) - set(DEFAULT_WEIGHTS)
        if unknown:
            raise ValueError(f"Unknown constructor weights: {sorted(unknown)}. "
                             f"Available: {list(DEFAULT_WEIGHTS.keys())}")
        self.weights = {**DEFAULT_WEIGHTS, **self.weights}
        for name, weight in self.weights.items():
            if weight <= 0:
                raise ValueError(f"Weight for {name} must be positive, got {weight}")
        if not self.scalar_pool:
            raise ValueError("scalar_pool must not be empty")
        if self.self_application_budget < 0:
            raise ValueError("self_application_budget must be non-negative")

    @classmethod
    def from_config(cls, config: Optional[Config] = None, **overrides) -> "GenConfig":
        """Build from the `generator` section of lambdalin.json"""
        config = config or Config()
        settings = config.get_generator_config()
        values = {
            'max_depth': settings['max_depth'],
            'scalar_pool': tuple(parse_scalar(str(text)) for text in settings['scalar_pool']),
            'weights': dict(settings['weights']),
            'closed_only': settings['closed_only'],
            'seed': config.seed,
            'self_application_budget': settings['self_application_budget'],
        }
        values.update(overrides)
        return cls(**values)


class TermGenerator:
    """Recursive generator drawing from a numpy Generator"""

    def __init__(self, cfg: GenConfig, rng: Optional[np.random.Generator] = None):
        self.cfg = cfg
        self.rng = rng if rng is not None else np.random.default_rng(cfg.seed)
        self.budget = cfg.self_application_budget

    def generate(self) -> Term:
        self.budget = self.cfg.self_application_budget
        return self._term(self.cfg.max_depth, [])

    def _pick(self, kinds: Sequence[str]) -> str:
        weights = np.array([self.cfg.weights[kind] for kind in kinds], dtype=float)
        return kinds[int(self.rng.choice(len(kinds), p=weights / weights.sum()))]

    def _variables(self, scope: List[str]) -> List[str]:
        if self.cfg.closed_only:
            return list(scope)
        return list(scope) + list(FREE_NAMES)

    def _term(self, depth: int, scope: List[str]) -> Term:
        variables = self._variables(scope)
        if depth <= 1:
            kinds = ['zero', 'lambda'] + (['variable'] if variables else [])
        else:
            kinds = list(DEFAULT_WEIGHTS)
            if not variables:
                kinds.remove('variable')
        kind = self._pick(kinds)

        if kind == 'zero':
            return Zero()
        if kind == 'variable':
            return Var(variables[int(self.rng.integers(len(variables)))])
        if kind == 'lambda':
            name = f"x{len(scope)}"
            if depth <= 1:
                return Lam(name, Var(name))
            return Lam(name, self._term(depth - 1, scope + [name]))
        if kind == 'scaled':
            scalar = self.cfg.scalar_pool[int(self.rng.integers(len(self.cfg.scalar_pool)))]
            return Scaled(scalar, self._term(depth - 1, scope))
        if kind == 'sum':
            return self._sum(depth, scope)
        return self._application(depth, scope)

    def _sum(self, depth: int, scope: List[str]) -> Term:
        addends = [self._term(depth - 1, scope) for _ in range(int(self.rng.integers(2, 4)))]
        if self.rng.random() < DUPLICATE_ADDEND_RATE:
            repeated = addends[int(self.rng.integers(len(addends)))]
            if self.rng.random() < 0.5:
                scalar = self.cfg.scalar_pool[int(self.rng.integers(len(self.cfg.scalar_pool)))]
                repeated = Scaled(scalar, repeated)
            addends.append(repeated)
        return make_sum(addends)

    def _application(self, depth: int, scope: List[str]) -> Term:
        fun = self._term(depth - 1, scope)
        arg = self._term(depth - 1, scope)
        head = _spine_head(fun)
        if isinstance(head, Var) and head.name in arg.free_vars:
            if self.budget > 0:
                self.budget -= 1
            else:
                # Keep the head variable out of its own argument
                arg = self._term(depth - 1, [name for name in scope if name != head.name])
        return App(fun, arg)


def _spine_head(t: Term) -> Term:
    while isinstance(t, App):
        t = t.fun
    return t


def generate_term(cfg: GenConfig, rng: Optional[np.random.Generator] = None) -> Term:
    """One random term; reproducible for a fixed cfg.seed when rng is omitted"""
    return TermGenerator(cfg, rng).generate()


def sample_rng(cfg: GenConfig, index: int) -> np.random.Generator:
    """Independent stream for sample `index` under cfg.seed"""
    return np.random.default_rng([cfg.seed, index])

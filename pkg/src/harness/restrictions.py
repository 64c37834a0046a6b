"""
Negative tests for the side conditions of L

Each check builds one of the indefinite-form terms around the divergent
Y b and confirms that the blocked rule does not fire. Runs under a system
with unrestricted factorisation are expected to fail the first check.
"""

from typing import Callable, Dict, List, Optional, Sequence

from .report import CaseResult, SuiteReport
from ..logger import get_logger
from ..parser import parse_term, print_term
from ..rewrite import (
    DEFAULT_SYSTEM, RandomSeededStrategy, RewriteSystem, RuleGroup, RuleId,
    normalize, normalize_with_strategy,
)
from ..stdlib import FALSE, TRUE, Y
from ..terms import Term, Zero

logger = get_logger('restrictions')

RESTRICTION_FUEL = 1000
RESTRICTION_SEEDS = range(5)

BINDINGS: Dict[str, Term] = {
    'Y': Y,
    'b': TRUE,
    'v': TRUE,
    'w': FALSE,
}

EXAMPLE_1 = "(Y b) - (Y b)"
EXAMPLE_2 = "(\\x.((x w) - (x w))) (\\y.(Y b))"
EXAMPLE_3 = "((\\x.(x w)) - (\\x.(x w))) (\\y.(Y b))"
EXAMPLE_4 = "((1/2).(x + y)) (Y b)"


def _term(src: str) -> Term:
    return parse_term(src, bindings=BINDINGS, lenient=True)


def _rules(redexes) -> List[str]:
    return [str(redex) for redex in redexes]


class RestrictionChecks:
    """The individual checks; every method returns one CaseResult"""

    def __init__(self, system: RewriteSystem = DEFAULT_SYSTEM,
                 fuel: int = RESTRICTION_FUEL, seeds: Sequence[int] = RESTRICTION_SEEDS):
        self.system = system
        self.fuel = fuel
        self.seeds = list(seeds)

    def _absent_at_root(self, name: str, family: str, src: str,
                        forbidden: Callable[[RuleId], bool]) -> CaseResult:
        term = _term(src)
        root = self.system.local_redexes(term)
        hits = [redex for redex in root if forbidden(redex.rule)]
        return CaseResult(name, not hits,
                          f"forbidden root redexes {_rules(hits)}" if hits else "",
                          family=family, data={'term': src, 'root_redexes': _rules(root)})

    def _never_zero(self, name: str, family: str, src: str) -> CaseResult:
        term = _term(src)
        reached = []
        for seed in self.seeds:
            outcome = normalize_with_strategy(term, self.fuel, RandomSeededStrategy(seed), self.system)
            if outcome.is_normal and outcome.term == Zero():
                reached.append(seed)
        return CaseResult(name, not reached,
                          f"reached 0v under seeds {reached}" if reached else "",
                          family=family, data={'term': src, 'seeds': self.seeds, 'fuel': self.fuel})

    def example_1_no_factor(self) -> CaseResult:
        return self._absent_at_root("example-1/no-factor", "example-1", EXAMPLE_1,
                                    lambda rule: rule.group is RuleGroup.FACTORISATION)

    def example_1_never_zero(self) -> CaseResult:
        return self._never_zero("example-1/never-zero", "example-1", EXAMPLE_1)

    def example_2_no_open_factor(self) -> CaseResult:
        term = _term(EXAMPLE_2)
        hits = [redex for redex in self.system.enumerate_redexes(term)
                if redex.rule.group is RuleGroup.FACTORISATION]
        return CaseResult("example-2/no-open-factor", not hits,
                          f"factorisation under the binder: {_rules(hits)}" if hits else "",
                          family="example-2", data={'term': EXAMPLE_2})

    def example_2_never_zero(self) -> CaseResult:
        return self._never_zero("example-2/never-zero", "example-2", EXAMPLE_2)

    def example_3_no_distribution(self) -> CaseResult:
        return self._absent_at_root("example-3/no-distribution", "example-3", EXAMPLE_3,
                                    lambda rule: rule is RuleId.DIST_APP_LEFT)

    def example_3_cancels(self) -> CaseResult:
        # The applied difference is closed, so it factors to 0v before any unfolding
        outcome = normalize(_term(EXAMPLE_3), self.fuel, self.system)
        ok = outcome.is_normal and outcome.term == Zero()
        return CaseResult("example-3/cancels", ok,
                          "" if ok else f"{outcome.status.value}: {print_term(outcome.term)}",
                          family="example-3", data={'term': EXAMPLE_3, 'steps': outcome.steps})

    def example_4_no_open_scale(self) -> CaseResult:
        return self._absent_at_root("example-4/no-open-scale", "example-4", EXAMPLE_4,
                                    lambda rule: rule is RuleId.SCALE_APP_LEFT)

    def open_sum_no_distribution(self) -> CaseResult:
        return self._absent_at_root("open-sum/no-distribution", "distribution", "(x + y) w",
                                    lambda rule: rule is RuleId.DIST_APP_LEFT)

    def non_normal_sum_no_distribution(self) -> CaseResult:
        return self._absent_at_root("non-normal-sum/no-distribution", "distribution", "(v + v) w",
                                    lambda rule: rule is RuleId.DIST_APP_LEFT)

    def beta_needs_base(self) -> CaseResult:
        src = "(\\x.(x x)) (v + w)"
        root = [redex.rule for redex in self.system.local_redexes(_term(src))]
        ok = root == [RuleId.DIST_APP_RIGHT]
        return CaseResult("beta/needs-base", ok,
                          "" if ok else f"root redexes {[rule.value for rule in root]}",
                          family="beta", data={'term': src})

    def all(self) -> List[Callable[[], CaseResult]]:
        return [
            self.example_1_no_factor,
            self.example_1_never_zero,
            self.example_2_no_open_factor,
            self.example_2_never_zero,
            self.example_3_no_distribution,
            self.example_3_cancels,
            self.example_4_no_open_scale,
            self.open_sum_no_distribution,
            self.non_normal_sum_no_distribution,
            self.beta_needs_base,
        ]


def restriction_suite(fuel: int = RESTRICTION_FUEL, seeds: Optional[Sequence[int]] = None,
                      system: RewriteSystem = DEFAULT_SYSTEM) -> SuiteReport:
    checks = RestrictionChecks(system, fuel, RESTRICTION_SEEDS if seeds is None else seeds)
    report = SuiteReport('restrictions')
    for check in checks.all():
        result = check()
        if not result.passed:
            logger.warning(f"{result.name}: {result.detail}")
        report.add(result)
    return report.finish()

"""
Critical-pair joinability suite

Each case names a source term with two overlapping redexes. Both one-step
reducts are computed, checked to differ, normalised, and compared. Sources
use the closed normal witnesses

    u = \\z.z    v = true    w = false    s = \\f.(f f)

and the scalars 1/2, sqrt2/2 and i. Family heads are listed first; cases
with `analogous_to` set stand for a group of symmetric variants.

Not instantiated:
  - sum pairs that split a scaled sum into two partial sums (4, 7, 8, 11):
    distribution always spreads over the whole flattened sum, and pairs 3,
    6 and 10 cover the same overlaps;
  - sum pairs 42 and 43, which factor a whole sub-sum (u + v) against
    a.(u + v): factorisation works on pairs of addends, and the scaled
    sum always distributes first, so no joinability question arises;
  - application pair 19, 0v 0v, whose two reducts are the same term.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .report import CaseResult, SuiteReport
from ..exceptions import CalculusException, InvalidRedexError
from ..logger import get_logger
from ..parser import parse_term, print_term
from ..rewrite import DEFAULT_SYSTEM, Redex, RewriteSystem, RuleId, normalize
from ..stdlib import FALSE, TRUE
from ..terms import App, Lam, Term, Var

logger = get_logger('critical_pairs')

PAIR_FUEL = 1000

WITNESSES: Dict[str, Term] = {
    'u': Lam('z', Var('z')),
    'v': TRUE,
    'w': FALSE,
    's': Lam('f', App(Var('f'), Var('f'))),
}


@dataclass(frozen=True)
class RedexSelector:
    """Picks one redex by rule, optional path and occurrence index"""
    rule: RuleId
    path: Optional[Tuple[int, ...]] = None
    occurrence: int = 0

    def select(self, redexes: List[Redex]) -> Redex:
        matching = [redex for redex in redexes
                    if redex.rule is self.rule and (self.path is None or redex.path == self.path)]
        if self.occurrence >= len(matching):
            raise InvalidRedexError(
                f"No occurrence {self.occurrence} of {self.rule} "
                f"(found {len(matching)} among {[str(r) for r in redexes]})")
        return matching[self.occurrence]


@dataclass(frozen=True)
class PairCase:
    name: str
    source: str
    left: RedexSelector
    right: RedexSelector
    expected: Optional[str] = None
    analogous_to: Optional[str] = None

    @property
    def family(self) -> str:
        return self.analogous_to or self.name

    def instantiate(self, system: RewriteSystem = DEFAULT_SYSTEM,
                    bindings: Optional[Mapping[str, Term]] = None):
        """Source term, the two redexes and their one-step reducts"""
        term = parse_term(self.source, bindings=bindings or WITNESSES, lenient=False)
        redexes = system.enumerate_redexes(term)
        left, right = self.left.select(redexes), self.right.select(redexes)
        return term, left, right, system.apply_redex(term, left), system.apply_redex(term, right)


def _sel(rule: RuleId, path: Optional[Tuple[int, ...]] = None, occurrence: int = 0) -> RedexSelector:
    return RedexSelector(rule, path, occurrence)


SUM_PAIRS: List[PairCase] = [
    PairCase("F-Pair-1", "0v + 0v",
             _sel(RuleId.PLUS_ZERO), _sel(RuleId.FACTOR_NONE), "0v"),
    PairCase("F-Pair-2", "(1/2).((sqrt2/2).u + i.u)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_BOTH, (0,)), "(sqrt2/4 + i/2).u"),
    PairCase("F-Pair-3", "(1/2).((sqrt2/2).u + i.u + v)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_BOTH, (0,)),
             "(sqrt2/4 + i/2).u + (1/2).v", analogous_to="F-Pair-2"),
    PairCase("F-Pair-5", "(1/2).((sqrt2/2).u + u)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_ONE, (0,)),
             "(1/2 + sqrt2/4).u", analogous_to="F-Pair-2"),
    PairCase("F-Pair-6", "(1/2).((sqrt2/2).u + u + v)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_ONE, (0,)),
             "(1/2 + sqrt2/4).u + (1/2).v", analogous_to="F-Pair-2"),
    PairCase("F-Pair-9", "(1/2).(u + u)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_NONE, (0,)),
             "u", analogous_to="F-Pair-2"),
    PairCase("F-Pair-10", "(1/2).(u + u + v)",
             _sel(RuleId.SCALE_SUM, ()), _sel(RuleId.FACTOR_NONE, (0,)),
             "u + (1/2).v", analogous_to="F-Pair-2"),
    PairCase("F-Pair-12", "(1/2).u + (1/2).u",
             _sel(RuleId.FACTOR_BOTH), _sel(RuleId.FACTOR_NONE), "u"),
    PairCase("F-Pair-13", "(1/2).u + (1/2).u + v",
             _sel(RuleId.FACTOR_BOTH), _sel(RuleId.FACTOR_NONE), "u + v", analogous_to="F-Pair-12"),
    PairCase("F-Pair-14", "(1/2).u + (sqrt2/2).u + i.u",
             _sel(RuleId.FACTOR_BOTH, occurrence=0), _sel(RuleId.FACTOR_BOTH, occurrence=1),
             "(1/2 + sqrt2/2 + i).u"),
    PairCase("F-Pair-15", "(1/2).u + (sqrt2/2).u + i.u + v",
             _sel(RuleId.FACTOR_BOTH, occurrence=0), _sel(RuleId.FACTOR_BOTH, occurrence=1),
             "(1/2 + sqrt2/2 + i).u + v", analogous_to="F-Pair-14"),
    PairCase("F-Pair-16", "(1/2).u + (sqrt2/2).u + u",
             _sel(RuleId.FACTOR_BOTH), _sel(RuleId.FACTOR_ONE),
             "(3/2 + sqrt2/2).u", analogous_to="F-Pair-14"),
    PairCase("F-Pair-17", "(1/2).u + (sqrt2/2).u + u + v",
             _sel(RuleId.FACTOR_BOTH), _sel(RuleId.FACTOR_ONE),
             "(3/2 + sqrt2/2).u + v", analogous_to="F-Pair-14"),
    PairCase("F-Pair-18", "(1/2).u + (1/2).u + (sqrt2/2).u",
             _sel(RuleId.FACTOR_NONE), _sel(RuleId.FACTOR_BOTH, occurrence=0),
             "(1 + sqrt2/2).u"),
    PairCase("F-Pair-19", "(1/2).u + (1/2).u + (sqrt2/2).u + v",
             _sel(RuleId.FACTOR_NONE), _sel(RuleId.FACTOR_BOTH, occurrence=0),
             "(1 + sqrt2/2).u + v", analogous_to="F-Pair-18"),
    PairCase("F-Pair-20", "(1/2).u + (1/2).u + u",
             _sel(RuleId.FACTOR_NONE), _sel(RuleId.FACTOR_ONE),
             "2.u", analogous_to="F-Pair-18"),
    PairCase("F-Pair-21", "(1/2).u + (1/2).u + u + v",
             _sel(RuleId.FACTOR_NONE), _sel(RuleId.FACTOR_ONE),
             "2.u + v", analogous_to="F-Pair-18"),
    PairCase("F-Pair-22", "(1/2).u + u + u",
             _sel(RuleId.FACTOR_ONE), _sel(RuleId.FACTOR_NONE),
             "(5/2).u", analogous_to="F-Pair-14"),
    PairCase("F-Pair-23", "(1/2).u + u + u + v",
             _sel(RuleId.FACTOR_ONE), _sel(RuleId.FACTOR_NONE),
             "(5/2).u + v", analogous_to="F-Pair-14"),
    PairCase("F-Pair-24", "0.u + (1/2).u",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.FACTOR_BOTH), "(1/2).u"),
    PairCase("F-Pair-25", "0.u + (1/2).u + v",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.FACTOR_BOTH),
             "(1/2).u + v", analogous_to="F-Pair-24"),
    PairCase("F-Pair-26", "0.u + u",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.FACTOR_ONE), "u", analogous_to="F-Pair-24"),
    PairCase("F-Pair-27", "0.u + u + v",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.FACTOR_ONE), "u + v", analogous_to="F-Pair-24"),
    PairCase("F-Pair-28", "(1/2).u + 1.u",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.FACTOR_BOTH), "(3/2).u"),
    PairCase("F-Pair-29", "(1/2).u + 1.u + v",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.FACTOR_BOTH),
             "(3/2).u + v", analogous_to="F-Pair-28"),
    PairCase("F-Pair-30", "1.u + u",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.FACTOR_ONE), "2.u", analogous_to="F-Pair-28"),
    PairCase("F-Pair-31", "1.u + u + v",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.FACTOR_ONE), "2.u + v", analogous_to="F-Pair-28"),
    PairCase("F-Pair-32", "0v + (1/2).0v",
             _sel(RuleId.SCALE_ZERO_VECTOR), _sel(RuleId.FACTOR_ONE), "0v"),
    PairCase("F-Pair-33", "0v + (1/2).0v + v",
             _sel(RuleId.SCALE_ZERO_VECTOR), _sel(RuleId.FACTOR_ONE), "v", analogous_to="F-Pair-32"),
    PairCase("F-Pair-34", "(1/2).0v + (sqrt2/2).0v",
             _sel(RuleId.SCALE_ZERO_VECTOR, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "0v", analogous_to="F-Pair-32"),
    PairCase("F-Pair-35", "(1/2).0v + (sqrt2/2).0v + v",
             _sel(RuleId.SCALE_ZERO_VECTOR, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "v", analogous_to="F-Pair-32"),
    PairCase("F-Pair-36", "(1/2).(i.u) + (sqrt2/2).(i.u)",
             _sel(RuleId.SCALE_SCALE, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "((1/2 + sqrt2/2)*i).u"),
    PairCase("F-Pair-37", "(1/2).(i.u) + (sqrt2/2).(i.u) + v",
             _sel(RuleId.SCALE_SCALE, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "((1/2 + sqrt2/2)*i).u + v", analogous_to="F-Pair-36"),
    PairCase("F-Pair-38", "(sqrt2/2).u + (1/2).((sqrt2/2).u)",
             _sel(RuleId.SCALE_SCALE), _sel(RuleId.FACTOR_ONE),
             "(3*sqrt2/4).u", analogous_to="F-Pair-36"),
    PairCase("F-Pair-39", "(sqrt2/2).u + (1/2).((sqrt2/2).u) + v",
             _sel(RuleId.SCALE_SCALE), _sel(RuleId.FACTOR_ONE),
             "(3*sqrt2/4).u + v", analogous_to="F-Pair-36"),
    PairCase("F-Pair-40", "(1/2).(u + v) + (sqrt2/2).(u + v)",
             _sel(RuleId.SCALE_SUM, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "(1/2 + sqrt2/2).u + (1/2 + sqrt2/2).v"),
    PairCase("F-Pair-41", "(1/2).(u + v) + (sqrt2/2).(u + v) + w",
             _sel(RuleId.SCALE_SUM, occurrence=0), _sel(RuleId.FACTOR_BOTH),
             "(1/2 + sqrt2/2).u + (1/2 + sqrt2/2).v + w", analogous_to="F-Pair-40"),
]

APPLICATION_PAIRS: List[PairCase] = [
    PairCase("A-Pair-1", "(0.u) v",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.SCALE_APP_LEFT), "0v"),
    PairCase("A-Pair-2", "(1.u) v",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.SCALE_APP_LEFT), "u v"),
    PairCase("A-Pair-3", "((1/2).0v) v",
             _sel(RuleId.SCALE_ZERO_VECTOR), _sel(RuleId.SCALE_APP_LEFT), "0v"),
    PairCase("A-Pair-4", "((1/2).((sqrt2/2).u)) v",
             _sel(RuleId.SCALE_SCALE), _sel(RuleId.SCALE_APP_LEFT), "(sqrt2/4).v"),
    PairCase("A-Pair-5", "((1/2).(u + v)) w",
             _sel(RuleId.SCALE_SUM), _sel(RuleId.SCALE_APP_LEFT), "(1/2).(u w + v w)"),
    PairCase("A-Pair-6", "s (0.u)",
             _sel(RuleId.SCALE_ZERO), _sel(RuleId.SCALE_APP_RIGHT), "0v", analogous_to="A-Pair-1"),
    PairCase("A-Pair-7", "s (1.u)",
             _sel(RuleId.SCALE_ONE), _sel(RuleId.SCALE_APP_RIGHT), "s u", analogous_to="A-Pair-2"),
    PairCase("A-Pair-8", "s ((1/2).0v)",
             _sel(RuleId.SCALE_ZERO_VECTOR), _sel(RuleId.SCALE_APP_RIGHT), "0v", analogous_to="A-Pair-3"),
    PairCase("A-Pair-9", "s ((1/2).((sqrt2/2).u))",
             _sel(RuleId.SCALE_SCALE), _sel(RuleId.SCALE_APP_RIGHT), "(sqrt2/4).u",
             analogous_to="A-Pair-4"),
    PairCase("A-Pair-10", "s ((1/2).(u + v))",
             _sel(RuleId.SCALE_SUM), _sel(RuleId.SCALE_APP_RIGHT), "(1/2).(s u + s v)",
             analogous_to="A-Pair-5"),
    PairCase("A-Pair-11", "(u + v) (w + s)",
             _sel(RuleId.DIST_APP_LEFT), _sel(RuleId.DIST_APP_RIGHT), "u w + u s + v w + v s"),
    PairCase("A-Pair-12", "(u + v) ((1/2).w)",
             _sel(RuleId.DIST_APP_LEFT), _sel(RuleId.SCALE_APP_RIGHT), "(1/2).(u w + v w)"),
    PairCase("A-Pair-13", "(u + v) 0v",
             _sel(RuleId.DIST_APP_LEFT), _sel(RuleId.ZERO_APP_RIGHT), "0v"),
    PairCase("A-Pair-14", "((1/2).u) (v + w)",
             _sel(RuleId.SCALE_APP_LEFT), _sel(RuleId.DIST_APP_RIGHT), "(1/2).(v + w)"),
    PairCase("A-Pair-15", "((1/2).u) ((sqrt2/2).v)",
             _sel(RuleId.SCALE_APP_LEFT), _sel(RuleId.SCALE_APP_RIGHT), "(sqrt2/4).v"),
    PairCase("A-Pair-16", "((1/2).u) 0v",
             _sel(RuleId.SCALE_APP_LEFT), _sel(RuleId.ZERO_APP_RIGHT), "0v"),
    PairCase("A-Pair-17", "0v (u + v)",
             _sel(RuleId.ZERO_APP_LEFT), _sel(RuleId.DIST_APP_RIGHT), "0v"),
    PairCase("A-Pair-18", "0v ((1/2).u)",
             _sel(RuleId.ZERO_APP_LEFT), _sel(RuleId.SCALE_APP_RIGHT), "0v"),
]

# Beta against a redex inside the abstraction body
BETA_PAIRS: List[PairCase] = [
    PairCase("B-Pair-1", "(\\x.(1.x)) v",
             _sel(RuleId.BETA), _sel(RuleId.SCALE_ONE, (0, 0)), "v"),
    PairCase("B-Pair-2", "(\\x.(((1/2).u) x)) w",
             _sel(RuleId.BETA), _sel(RuleId.SCALE_APP_LEFT, (0, 0)), "(1/2).w"),
]

PAIR_CASES: List[PairCase] = SUM_PAIRS + APPLICATION_PAIRS + BETA_PAIRS


def run_pair_case(case: PairCase, fuel: int = PAIR_FUEL,
                  system: RewriteSystem = DEFAULT_SYSTEM) -> CaseResult:
    try:
        term, left, right, left_reduct, right_reduct = case.instantiate(system)
    except CalculusException as e:
        return CaseResult(case.name, False, f"cannot instantiate: {e}", family=case.family)

    data = {
        'source': print_term(term),
        'left_redex': str(left),
        'right_redex': str(right),
        'left_reduct': print_term(left_reduct),
        'right_reduct': print_term(right_reduct),
        'analogous_to': case.analogous_to,
    }
    if left_reduct == right_reduct:
        return CaseResult(case.name, False, "reducts coincide", family=case.family, data=data)

    left_outcome = normalize(left_reduct, fuel, system)
    right_outcome = normalize(right_reduct, fuel, system)
    if not (left_outcome.is_normal and right_outcome.is_normal):
        return CaseResult(case.name, False, f"no normal form within fuel {fuel}",
                          family=case.family, data=data)

    data['joint'] = print_term(left_outcome.term)
    if left_outcome.term != right_outcome.term:
        return CaseResult(case.name, False,
                          f"{print_term(left_outcome.term)} != {print_term(right_outcome.term)}",
                          family=case.family, data=data)

    if case.expected is not None:
        expected = normalize(parse_term(case.expected, bindings=WITNESSES, lenient=False),
                             fuel, system)
        if expected.term != left_outcome.term:
            return CaseResult(case.name, False,
                              f"joined at {data['joint']}, expected {print_term(expected.term)}",
                              family=case.family, data=data)

    return CaseResult(case.name, True, family=case.family, data=data)


def critical_pair_suite(fuel: int = PAIR_FUEL, system: RewriteSystem = DEFAULT_SYSTEM,
                        cases: Optional[List[PairCase]] = None) -> SuiteReport:
    report = SuiteReport('critical-pairs')
    selected = PAIR_CASES if cases is None else cases
    logger.info(f"Checking {len(selected)} critical pairs")
    for case in selected:
        result = run_pair_case(case, fuel, system)
        if not result.passed:
            logger.warning(f"{case.name}: {result.detail}")
        report.add(result)
    return report.finish()


def pair_manifest(cases: Optional[List[PairCase]] = None) -> List[Dict[str, object]]:
    """Audit listing: family head, source and both selected redexes per case"""
    rows = []
    for case in PAIR_CASES if cases is None else cases:
        rows.append({
            'name': case.name,
            'family': case.family,
            'source': case.source,
            'left': f"{case.left.rule.value}@{case.left.path}#{case.left.occurrence}",
            'right': f"{case.right.rule.value}@{case.right.path}#{case.right.occurrence}",
            'representative': case.analogous_to is not None,
        })
    return rows

"""
Statistical confluence checking and parser round-trips over generated terms
"""

from typing import Callable, Iterator, List, Mapping, Optional, Sequence

from .generator import GenConfig, generate_term, sample_rng
from .report import (
    AGREE, DISAGREE, EXHAUSTED, CaseResult, ConfluenceReport, SampleResult, SuiteReport,
)
from .shape import normal_form_shape_ok
from ..logger import get_logger
from ..parser import parse_term, print_term
from ..rewrite import (
    DEFAULT_SYSTEM, NormalizeOutcome, RandomSeededStrategy, RewriteSystem,
    normalize_with_strategy,
)
from ..terms import Sum, Term, make_sum, positions, replace_at, size

logger = get_logger('confluence')

MAX_SHRINK_ROUNDS = 200


def run_seeds(t: Term, fuel: int, seeds: Sequence[int],
              system: RewriteSystem = DEFAULT_SYSTEM) -> List[NormalizeOutcome]:
    return [normalize_with_strategy(t, fuel, RandomSeededStrategy(seed), system) for seed in seeds]


def disagrees(outcomes: Sequence[NormalizeOutcome]) -> bool:
    """Two runs that both reached a normal form with different results"""
    normals = [outcome.term for outcome in outcomes if outcome.is_normal]
    return any(term != normals[0] for term in normals[1:])


def shrink_candidates(t: Term) -> Iterator[Term]:
    """Strictly smaller variants: subterms, hoisted children, sums minus one addend"""
    for path, node in positions(t):
        if path:
            yield node
        for child in node.children():
            yield replace_at(t, path, child)
        if isinstance(node, Sum):
            for index in range(len(node.addends)):
                rest = node.addends[:index] + node.addends[index + 1:]
                yield replace_at(t, path, make_sum(rest))


def shrink(t: Term, still_failing: Callable[[Term], bool],
           max_rounds: int = MAX_SHRINK_ROUNDS) -> Term:
    """Greedy shrinking: keep the first smaller candidate that still fails"""
    current = t
    for _ in range(max_rounds):
        current_size = size(current)
        for candidate in shrink_candidates(current):
            if size(candidate) < current_size and still_failing(candidate):
                current = candidate
                break
        else:
            return current
    return current


def check_confluence_sample(cfg: GenConfig, fuel: int, seeds: Sequence[int],
                            samples: int = 1000,
                            system: RewriteSystem = DEFAULT_SYSTEM,
                            min_normalizing_fraction: float = 0.6) -> ConfluenceReport:
    """
    Normalise generated terms under several random strategies and compare

    Raises:
        ValueError: With fewer than two seeds
    """
    if len(seeds) < 2:
        raise ValueError(f"Confluence sampling needs at least two seeds, got {list(seeds)}")

    report = ConfluenceReport(seeds=list(seeds), fuel=fuel,
                              min_normalizing_fraction=min_normalizing_fraction)
    logger.info(f"Confluence sampling: {samples} terms, seeds {list(seeds)}, fuel {fuel}")

    for index in range(samples):
        term = generate_term(cfg, sample_rng(cfg, index))
        report.add(classify_sample(term, index, fuel, seeds, system))

    report.finish()
    logger.info(f"Confluence sampling finished: {report.summary()}")
    return report


def classify_sample(term: Term, index: int, fuel: int, seeds: Sequence[int],
                    system: RewriteSystem = DEFAULT_SYSTEM) -> SampleResult:
    """Run one term under every seed and classify the outcomes"""
    outcomes = run_seeds(term, fuel, seeds, system)
    steps = [outcome.steps for outcome in outcomes]

    if disagrees(outcomes):
        minimal = shrink(term, lambda t: disagrees(run_seeds(t, fuel, seeds, system)))
        logger.error(f"Sample {index} disagrees; minimal counterexample {print_term(minimal)}")
        return SampleResult(index, DISAGREE, steps, print_term(term),
                            counterexample=print_term(minimal))

    normal = next((outcome.term for outcome in outcomes if outcome.is_normal), None)
    status = AGREE if all(outcome.is_normal for outcome in outcomes) else EXHAUSTED
    shape_ok = None
    if normal is not None and not term.free_vars:
        shape_ok = normal_form_shape_ok(normal, system)
    return SampleResult(
        index, status, steps, print_term(term),
        normal_form=print_term(normal) if normal is not None else None,
        shape_ok=shape_ok,
    )


def roundtrip_sample(cfg: GenConfig, samples: int = 1000,
                     names: Optional[Mapping[str, Term]] = None) -> SuiteReport:
    """parse(print(t)) == t for generated terms; only failures are recorded"""
    report = SuiteReport('roundtrip')
    checked = 0
    for index in range(samples):
        term = generate_term(cfg, sample_rng(cfg, index))
        text = print_term(term, names)
        checked += 1
        try:
            reparsed = parse_term(text, bindings=names)
        except Exception as e:
            report.add(CaseResult(f"sample-{index}", False, f"{text!r}: {e}"))
            continue
        if reparsed != term:
            report.add(CaseResult(f"sample-{index}", False,
                                  f"{text!r} re-parsed as {print_term(reparsed)!r}"))
    report.add(CaseResult('roundtrip', not report.failures, f"{checked} terms checked",
                          data={'checked': checked}))
    return report.finish()

"""Property harness: critical pairs, side-condition checks and confluence sampling"""

from .report import (
    CaseResult, SuiteReport, SampleResult, ConfluenceReport, AGREE, DISAGREE, EXHAUSTED,
)
from .shape import shape_violation, normal_form_shape_ok
from .generator import GenConfig, TermGenerator, generate_term, sample_rng
from .confluence import (
    run_seeds, disagrees, shrink, shrink_candidates, check_confluence_sample, classify_sample,
    roundtrip_sample,
)
from .critical_pairs import (
    RedexSelector, PairCase, PAIR_CASES, WITNESSES, critical_pair_suite, run_pair_case,
    pair_manifest,
)
from .restrictions import RestrictionChecks, restriction_suite
from .checks import CheckRun, run_checks

__all__ = [
    'CaseResult', 'SuiteReport', 'SampleResult', 'ConfluenceReport',
    'AGREE', 'DISAGREE', 'EXHAUSTED',
    'shape_violation', 'normal_form_shape_ok',
    'GenConfig', 'TermGenerator', 'generate_term', 'sample_rng',
    'run_seeds', 'disagrees', 'shrink', 'shrink_candidates',
    'check_confluence_sample', 'classify_sample', 'roundtrip_sample',
    'RedexSelector', 'PairCase', 'PAIR_CASES', 'WITNESSES', 'critical_pair_suite',
    'run_pair_case', 'pair_manifest',
    'RestrictionChecks', 'restriction_suite',
    'CheckRun', 'run_checks',
]

"""
The full property check behind `lambdalin check`
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Union

from .confluence import check_confluence_sample
from .critical_pairs import PAIR_FUEL, critical_pair_suite
from .generator import GenConfig
from .report import ConfluenceReport, SuiteReport
from .restrictions import RESTRICTION_FUEL, restriction_suite
from ..exceptions import SuiteFailureException
from ..logger import get_logger
from ..rewrite import DEFAULT_SYSTEM, RewriteSystem

logger = get_logger('checks')

Report = Union[SuiteReport, ConfluenceReport]


@dataclass
class CheckRun:
    reports: List[Report] = field(default_factory=list)

    @property
    def failures(self) -> int:
        total = 0
        for report in self.reports:
            if isinstance(report, ConfluenceReport):
                total += len(report.disagreements) + len(report.shape_failures)
                total += 0 if report.healthy else 1
            else:
                total += len(report.failures)
        return total

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def failed_suites(self) -> List[str]:
        return [report.suite for report in self.reports if not report.passed]

    def to_lines(self) -> List[str]:
        lines = []
        for report in self.reports:
            lines.extend(report.to_lines())
        lines.append("OK" if self.passed else f"FAILED: {self.failures} failure(s) in {self.failed_suites}")
        return lines

    def to_records(self) -> List[str]:
        records = []
        for report in self.reports:
            records.extend(report.to_records())
        return records

    def raise_for_failures(self):
        if not self.passed:
            raise SuiteFailureException(self.failures, self.failed_suites)


def run_checks(cfg: GenConfig, fuel: int, samples: int, seeds: Sequence[int],
               system: RewriteSystem = DEFAULT_SYSTEM,
               check_config: Optional[Dict[str, Any]] = None) -> CheckRun:
    """Restriction suite, critical pairs, then confluence sampling"""
    settings = check_config or {}
    run = CheckRun()

    run.reports.append(restriction_suite(
        fuel=settings.get('restriction_fuel', RESTRICTION_FUEL),
        seeds=range(settings.get('restriction_seeds', 5)),
        system=system,
    ))
    run.reports.append(critical_pair_suite(fuel=settings.get('pair_fuel', PAIR_FUEL), system=system))
    if samples > 0:
        run.reports.append(check_confluence_sample(cfg, fuel, seeds, samples, system))

    logger.info(f"Checks finished with {run.failures} failure(s)")
    return run

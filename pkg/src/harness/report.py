"""
Suite reports

Every report renders as text lines for people and as one JSON object per
line for machines; pandas does the aggregation.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

import pandas as pd


@dataclass
class CaseResult:
    """Outcome of one named check"""
    name: str
    passed: bool
    detail: str = ""
    family: Optional[str] = None
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'family': self.family,
            'detail': self.detail,
            **self.data,
        }


@dataclass
class SuiteReport:
    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    started_at: datetime = field(default_factory=datetime.now)
    finished_at: Optional[datetime] = None

    def add(self, case: CaseResult):
        self.cases.append(case)

    def finish(self) -> "SuiteReport":
        self.finished_at = datetime.now()
        return self

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def elapsed_seconds(self) -> float:
        end = self.finished_at or datetime.now()
        return (end - self.started_at).total_seconds()

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([case.to_dict() for case in self.cases],
                            columns=None if self.cases else ['name', 'passed', 'family', 'detail'])

    def summary(self) -> Dict[str, Any]:
        df = self.to_dataframe()
        by_family = {}
        if not df.empty and df['family'].notna().any():
            by_family = df.groupby(df['family'].fillna('-'))['passed'].mean().round(3).to_dict()
        return {
            'suite': self.suite,
            'cases': len(df),
            'passed': int(df['passed'].sum()) if not df.empty else 0,
            'failed': len(self.failures),
            'pass_rate_by_family': by_family,
            'elapsed_seconds': round(self.elapsed_seconds, 3),
        }

    def to_lines(self) -> List[str]:
        lines = []
        for case in self.cases:
            status = "PASS" if case.passed else "FAIL"
            suffix = f"  {case.detail}" if case.detail and not case.passed else ""
            lines.append(f"{status}\t{self.suite}\t{case.name}{suffix}")
        summary = self.summary()
        lines.append(f"{self.suite}: {summary['passed']}/{summary['cases']} passed")
        return lines

    def to_records(self) -> List[str]:
        records = [json.dumps({'suite': self.suite, **case.to_dict()}, default=str)
                   for case in self.cases]
        records.append(json.dumps({'suite': self.suite, 'summary': self.summary()}, default=str))
        return records


@dataclass
class SampleResult:
    """One generated term run under every seed"""
    index: int
    status: str
    steps: List[int]
    term: str
    normal_form: Optional[str] = None
    shape_ok: Optional[bool] = None
    counterexample: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'sample': self.index,
            'status': self.status,
            'steps': self.steps,
            'term': self.term,
            'normal_form': self.normal_form,
            'shape_ok': self.shape_ok,
            'counterexample': self.counterexample,
        }


AGREE = "agree"
DISAGREE = "disagree"
EXHAUSTED = "exhausted"


@dataclass
class ConfluenceReport:
    seeds: List[int]
    fuel: int
    samples: List[SampleResult] = field(default_factory=list)
    min_normalizing_fraction: float = 0.6
    started_at: datetime = field(default_factory=datetime.now)
    finished_at: Optional[datetime] = None

    suite = "confluence"

    def add(self, sample: SampleResult):
        self.samples.append(sample)

    def finish(self) -> "ConfluenceReport":
        self.samples.sort(key=lambda sample: sample.index)
        self.finished_at = datetime.now()
        return self

    def to_dataframe(self) -> pd.DataFrame:
        df = pd.DataFrame([sample.to_dict() for sample in self.samples],
                          columns=None if self.samples else list(SampleResult(0, '', [], '').to_dict()))
        if not df.empty:
            df['max_steps'] = df['steps'].apply(lambda steps: max(steps) if steps else 0)
        return df

    def count(self, status: str) -> int:
        return sum(1 for sample in self.samples if sample.status == status)

    @property
    def disagreements(self) -> List[SampleResult]:
        return [sample for sample in self.samples if sample.status == DISAGREE]

    @property
    def shape_failures(self) -> List[SampleResult]:
        return [sample for sample in self.samples if sample.shape_ok is False]

    @property
    def normalizing_fraction(self) -> float:
        if not self.samples:
            return 1.0
        return self.count(AGREE) / len(self.samples)

    @property
    def healthy(self) -> bool:
        return self.normalizing_fraction >= self.min_normalizing_fraction

    @property
    def passed(self) -> bool:
        return not self.disagreements and not self.shape_failures and self.healthy

    @property
    def elapsed_seconds(self) -> float:
        end = self.finished_at or datetime.now()
        return (end - self.started_at).total_seconds()

    def summary(self) -> Dict[str, Any]:
        df = self.to_dataframe()
        counts = df['status'].value_counts().to_dict() if not df.empty else {}
        step_stats = {}
        if not df.empty:
            described = df['max_steps'].describe()
            step_stats = {key: float(described[key]) for key in ('mean', 'max')}
        return {
            'suite': self.suite,
            'samples': len(self.samples),
            'seeds': list(self.seeds),
            'fuel': self.fuel,
            'agree': int(counts.get(AGREE, 0)),
            'disagree': int(counts.get(DISAGREE, 0)),
            'exhausted': int(counts.get(EXHAUSTED, 0)),
            'normalizing_fraction': round(self.normalizing_fraction, 4),
            'shape_failures': len(self.shape_failures),
            'steps': step_stats,
            'elapsed_seconds': round(self.elapsed_seconds, 3),
        }

    def to_lines(self) -> List[str]:
        lines = []
        for sample in self.disagreements:
            lines.append(f"FAIL\tconfluence\tsample {sample.index}: {sample.counterexample}")
        for sample in self.shape_failures:
            lines.append(f"FAIL\tshape\tsample {sample.index}: {sample.normal_form}")
        summary = self.summary()
        lines.append(
            f"confluence: {summary['samples']} samples, {summary['agree']} agree, "
            f"{summary['disagree']} disagree, {summary['exhausted']} exhausted, "
            f"normalizing {summary['normalizing_fraction']:.1%}, "
            f"shape failures {summary['shape_failures']}"
        )
        return lines

    def to_records(self) -> List[str]:
        records = [json.dumps({'suite': self.suite, **sample.to_dict()})
                   for sample in self.samples]
        records.append(json.dumps({'suite': self.suite, 'summary': self.summary()}))
        return records

"""Reference comparison: emitted reports vs transcribed expectations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import BenchError
from .specs import ReferenceTable


@dataclass(frozen=True)
class Verdict:
    model: str
    metric: str
    expected: float
    observed: float
    bound: float
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    verdicts: Tuple[Verdict, ...]

    @property
    def overall_pass(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "overall_pass": self.overall_pass,
            "checks": [{
                "model": verdict.model,
                "metric": verdict.metric,
                "expected": verdict.expected,
                "observed": verdict.observed,
                "tolerance": verdict.bound,
                "pass": verdict.passed,
            } for verdict in self.verdicts],
        }


def compare_to_reference(reports: List[dict],
                         table: ReferenceTable) -> CheckReport:
    """Per-model, per-metric |observed - expected| <= tolerance.

    Every table row must be covered by a report, and every referenced
    metric must appear in that report's metrics map.
    """
    by_model: Dict[str, dict] = {}
    for report in reports:
        by_model.setdefault(report["model"], report)

    verdicts: List[Verdict] = []
    for row in table.rows:
        report = by_model.get(row.model)
        if report is None:
            raise BenchError(f"no report for model {row.model}")
        for metric, expectation in row.expect.items():
            if metric not in report["metrics"]:
                raise BenchError(
                    f"report for {row.model} lacks metric {metric!r}")
            observed = float(report["metrics"][metric])
            verdicts.append(Verdict(
                model=row.model,
                metric=metric,
                expected=expectation.value,
                observed=observed,
                bound=expectation.bound,
                passed=expectation.accepts(observed)))
    return CheckReport(verdicts=tuple(verdicts))

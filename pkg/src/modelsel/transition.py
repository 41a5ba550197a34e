"""Iterative model-selection sessions: stop, advance, or escalate.

A session walks a :class:`~modelsel.heuristics.Recommendation` from the
simplest candidate upward.  Each observed :class:`MetricReport` yields a
:class:`TransitionDecision`: stop when the primary metric clears its
threshold, escalate to a more overfitting-robust candidate when the
report shows overfitting, advance otherwise, and stop with the best
result seen once candidates (or the step budget) run out.

No training happens here; reports arrive from outside (a benchmark
harness, or hand-typed numbers).
"""

from __future__ import annotations

import dataclasses
import enum
import json
import math
import statistics
from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple, Union

from .catalog import builtin_catalog
from .heuristics import (
    Recommendation,
    recommendation_from_dict,
    recommendation_to_dict,
)

__all__ = [
    "TransitionError",
    "WrongModelError",
    "SessionStoppedError",
    "MetricReport",
    "TransitionPolicy",
    "DecisionKind",
    "DecisionReason",
    "TransitionDecision",
    "SelectionState",
    "init_session",
    "detect_overfitting",
    "observe",
    "metric_report_to_dict",
    "metric_report_from_dict",
    "metric_report_from_json",
    "decision_to_dict",
    "decision_from_dict",
    "state_to_dict",
    "state_from_dict",
    "state_to_json",
    "state_from_json",
]


class TransitionError(ValueError):
    """Base class for session errors."""


class WrongModelError(TransitionError):
    """The report names a model other than the one at the cursor."""


class SessionStoppedError(TransitionError):
    """observe() was called after a Stop decision."""


_PARAM_TYPES = (str, int, float, bool, type(None))


def _require_finite(label: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise TransitionError(f"{label} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class MetricReport:
    """One model's evaluation results, as emitted by a harness run."""

    model: str
    params: Mapping[str, object] = field(default_factory=dict)
    metrics: Mapping[str, float] = field(default_factory=dict)
    cv_mean: float = 0.0
    test_score: float = 0.0
    cv_scores: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        if not self.model:
            raise TransitionError("report needs a model name")
        for key, value in self.params.items():
            if not isinstance(value, _PARAM_TYPES):
                raise TransitionError(
                    f"param {key!r} must be text or a number, "
                    f"got {type(value).__name__}")
        object.__setattr__(self, "metrics", {
            name: _require_finite(f"metric {name!r}", value)
            for name, value in self.metrics.items()})
        object.__setattr__(
            self, "cv_mean", _require_finite("cv_mean", self.cv_mean))
        object.__setattr__(
            self, "test_score", _require_finite("test_score",
                                                self.test_score))
        if self.cv_scores is not None:
            scores = tuple(
                _require_finite("cv_scores entry", s)
                for s in self.cv_scores)
            if not scores:
                raise TransitionError(
                    "cv_scores, when present, must be non-empty")
            object.__setattr__(self, "cv_scores", scores)


# bounded metrics get a [0, 1] threshold check; r2 and friends are open
_UNIT_INTERVAL_METRICS = frozenset({
    "accuracy", "precision", "recall", "f1", "roc_auc",
    "explained_variance_ratio",
})

DEFAULT_SATISFACTION: Mapping[str, float] = {
    "roc_auc": 0.85,
    "accuracy": 0.80,
    "r2": 0.60,
}


@dataclass(frozen=True)
class TransitionPolicy:
    """Thresholds steering a session.

    ``judge_on`` picks the value compared against the satisfaction
    threshold: ``"test"`` reads the primary metric from the report's
    held-out ``metrics`` map, ``"cv"`` uses ``cv_mean``.  ``max_steps``
    left as None resolves to the length of the ranked list at session
    start.
    """

    satisfaction: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_SATISFACTION))
    overfit_cv_std: float = 0.05
    overfit_gap: float = 0.10
    max_steps: Optional[int] = None
    judge_on: str = "test"

    def __post_init__(self) -> None:
        for metric, threshold in self.satisfaction.items():
            threshold = _require_finite(
                f"satisfaction threshold for {metric!r}", threshold)
            if metric in _UNIT_INTERVAL_METRICS \
                    and not 0.0 <= threshold <= 1.0:
                raise TransitionError(
                    f"threshold for {metric!r} must lie in [0, 1], "
                    f"got {threshold}")
        if self.overfit_cv_std <= 0 or self.overfit_gap <= 0:
            raise TransitionError("overfit parameters must be > 0")
        if self.max_steps is not None and self.max_steps <= 0:
            raise TransitionError("max_steps must be a positive count")
        if self.judge_on not in ("test", "cv"):
            raise TransitionError(
                f"judge_on must be 'test' or 'cv', got {self.judge_on!r}")

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "TransitionPolicy":
        """Build a policy from a config mapping.

        ``satisfaction`` entries are merged over the defaults rather
        than replacing the whole table.
        """
        known = {"satisfaction", "overfit_cv_std", "overfit_gap",
                 "max_steps", "judge_on"}
        unknown = sorted(set(data) - known)
        if unknown:
            raise TransitionError(
                f"unknown policy keys: {', '.join(unknown)}")
        kwargs = dict(data)
        overrides = kwargs.pop("satisfaction", None)
        if overrides is not None:
            merged = dict(DEFAULT_SATISFACTION)
            merged.update(overrides)
            kwargs["satisfaction"] = merged
        return cls(**kwargs)


class DecisionKind(enum.Enum):
    STOP = "stop"
    ADVANCE = "advance"
    ESCALATE = "escalate"


class DecisionReason(enum.Enum):
    SATISFIED = "satisfied"
    EXHAUSTED = "exhausted"
    UNDERPERFORMED = "underperformed"
    OVERFITTING_DETECTED = "overfitting_detected"


_KIND_REASONS = {
    DecisionKind.STOP: (DecisionReason.SATISFIED,
                        DecisionReason.EXHAUSTED),
    DecisionKind.ADVANCE: (DecisionReason.UNDERPERFORMED,),
    DecisionKind.ESCALATE: (DecisionReason.OVERFITTING_DETECTED,),
}


@dataclass(frozen=True)
class TransitionDecision:
    """What to do after one observed report.

    ``note`` is the human-readable justification citing the fired rule;
    ``best_so_far`` is carried only on Stop(Exhausted).
    """

    kind: DecisionKind
    reason: DecisionReason
    next_model: Optional[str] = None
    best_so_far: Optional[Tuple[str, float]] = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.reason not in _KIND_REASONS[self.kind]:
            raise TransitionError(
                f"{self.kind.value} cannot carry reason "
                f"{self.reason.value}")
        needs_target = self.kind is not DecisionKind.STOP
        if needs_target != (self.next_model is not None):
            raise TransitionError(
                "next_model is required exactly for advance/escalate")
        if self.best_so_far is not None \
                and self.reason is not DecisionReason.EXHAUSTED:
            raise TransitionError(
                "best_so_far travels only on Stop(Exhausted)")

    @classmethod
    def stop(cls, reason: DecisionReason,
             best_so_far: Optional[Tuple[str, float]] = None,
             note: str = "") -> "TransitionDecision":
        return cls(DecisionKind.STOP, reason,
                   best_so_far=best_so_far, note=note)

    @classmethod
    def advance(cls, next_model: str, note: str = "") \
            -> "TransitionDecision":
        return cls(DecisionKind.ADVANCE, DecisionReason.UNDERPERFORMED,
                   next_model=next_model, note=note)

    @classmethod
    def escalate(cls, next_model: str, note: str = "") \
            -> "TransitionDecision":
        return cls(DecisionKind.ESCALATE,
                   DecisionReason.OVERFITTING_DETECTED,
                   next_model=next_model, note=note)

    @property
    def is_stop(self) -> bool:
        return self.kind is DecisionKind.STOP


@dataclass(frozen=True)
class SelectionState:
    """A session snapshot.  observe() never mutates; it returns a copy."""

    recommendation: Recommendation
    policy: TransitionPolicy
    cursor: int = 0
    history: Tuple[Tuple[MetricReport, TransitionDecision], ...] = ()
    best_so_far: Optional[Tuple[str, float]] = None

    def __post_init__(self) -> None:
        ranked = self.recommendation.ranked
        if not 0 <= self.cursor <= len(ranked):
            raise TransitionError(
                f"cursor {self.cursor} outside 0..{len(ranked)}")
        if self.policy.max_steps is None:
            raise TransitionError(
                "session policies carry a resolved max_steps; "
                "use init_session")
        if self.best_so_far is not None:
            model, value = self.best_so_far
            if model not in ranked:
                raise TransitionError(
                    f"best_so_far model {model!r} is not in the ranking")
            _require_finite("best_so_far value", value)

    @property
    def current_model(self) -> Optional[str]:
        ranked = self.recommendation.ranked
        return ranked[self.cursor] if self.cursor < len(ranked) else None

    @property
    def stopped(self) -> bool:
        return bool(self.history) and self.history[-1][1].is_stop


def init_session(rec: Recommendation,
                 policy: Optional[TransitionPolicy] = None) \
        -> SelectionState:
    """Open a session on a recommendation, cursor at the first model."""
    policy = policy if policy is not None else TransitionPolicy()
    if policy.max_steps is None:
        policy = dataclasses.replace(
            policy, max_steps=len(rec.ranked))
    return SelectionState(recommendation=rec, policy=policy)


def _overfit_reason(report: MetricReport,
                    policy: TransitionPolicy) -> Optional[str]:
    if report.cv_scores is not None:
        spread = statistics.pstdev(report.cv_scores)
        if spread > policy.overfit_cv_std:
            return (f"cv score std {spread:.4f} exceeds "
                    f"{policy.overfit_cv_std:.4f}")
    gap = report.cv_mean - report.test_score
    if gap > policy.overfit_gap:
        return (f"cv-to-test gap {gap:.4f} exceeds "
                f"{policy.overfit_gap:.4f}")
    return None


def detect_overfitting(report: MetricReport,
                       policy: Optional[TransitionPolicy] = None) -> bool:
    """True iff fold scores are unstable or CV outruns the test score."""
    policy = policy if policy is not None else TransitionPolicy()
    return _overfit_reason(report, policy) is not None


def _judged_value(state: SelectionState, report: MetricReport) -> float:
    primary = state.recommendation.metric_set.primary
    if state.policy.judge_on == "cv":
        return report.cv_mean
    if primary not in report.metrics:
        raise TransitionError(
            f"report for {report.model} lacks the primary metric "
            f"{primary!r}")
    return report.metrics[primary]


def _escalation_target(state: SelectionState) -> Optional[int]:
    catalog = builtin_catalog()
    ranked = state.recommendation.ranked
    floor = catalog.get(ranked[state.cursor]).overfitting_robustness
    for index in range(state.cursor + 1, len(ranked)):
        if catalog.get(ranked[index]).overfitting_robustness > floor:
            return index
    return None


def observe(state: SelectionState, report: MetricReport) \
        -> Tuple[SelectionState, TransitionDecision]:
    """Fold one report into the session; returns (new state, decision)."""
    if state.stopped:
        last = state.history[-1][1]
        raise SessionStoppedError(
            f"session already stopped ({last.reason.value}); "
            "start a new one")
    expected = state.current_model
    if expected is None:
        raise SessionStoppedError("no candidates remain in this session")
    if report.model != expected:
        raise WrongModelError(
            f"expected a report for {expected}, got {report.model}")

    policy = state.policy
    primary = state.recommendation.metric_set.primary
    judged = _judged_value(state, report)
    threshold = policy.satisfaction.get(primary)
    overfit_note = _overfit_reason(report, policy)

    best = state.best_so_far
    if best is None or judged > best[1]:
        best = (report.model, judged)

    ranked = state.recommendation.ranked
    steps_taken = len(state.history) + 1

    if threshold is not None and judged >= threshold \
            and overfit_note is None:
        decision = TransitionDecision.stop(
            DecisionReason.SATISFIED,
            note=(f"{primary} {judged:.4f} meets the threshold "
                  f"{threshold:.4f}"))
        next_cursor = state.cursor
    elif state.cursor + 1 >= len(ranked) \
            or steps_taken >= policy.max_steps:
        cause = ("no candidates remain"
                 if state.cursor + 1 >= len(ranked)
                 else f"step budget {policy.max_steps} spent")
        decision = TransitionDecision.stop(
            DecisionReason.EXHAUSTED, best_so_far=best,
            note=(f"{cause}; best so far {best[0]} "
                  f"at {primary} {best[1]:.4f}"))
        next_cursor = state.cursor
    elif overfit_note is not None:
        target = _escalation_target(state)
        if target is not None:
            decision = TransitionDecision.escalate(
                ranked[target],
                note=(f"{overfit_note}; regularization or tuning on "
                      f"{report.model} may help, otherwise move to the "
                      f"more robust {ranked[target]}"))
            next_cursor = target
        else:
            decision = TransitionDecision.advance(
                ranked[state.cursor + 1],
                note=(f"{overfit_note}; no more robust candidate "
                      f"remains, advancing to "
                      f"{ranked[state.cursor + 1]}"))
            next_cursor = state.cursor + 1
    else:
        shortfall = ("no satisfaction threshold is configured for "
                     f"{primary}"
                     if threshold is None else
                     f"{primary} {judged:.4f} falls short of "
                     f"{threshold:.4f}")
        decision = TransitionDecision.advance(
            ranked[state.cursor + 1],
            note=f"{shortfall}; advancing to {ranked[state.cursor + 1]}")
        next_cursor = state.cursor + 1

    new_state = dataclasses.replace(
        state,
        cursor=next_cursor,
        history=state.history + ((report, decision),),
        best_so_far=best,
    )
    return new_state, decision


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def metric_report_to_dict(report: MetricReport) -> dict:
    return {
        "model": report.model,
        "params": dict(report.params),
        "metrics": dict(report.metrics),
        "cv_mean": report.cv_mean,
        "cv_scores": (list(report.cv_scores)
                      if report.cv_scores is not None else None),
        "test_score": report.test_score,
    }


def metric_report_from_dict(data: Mapping[str, object]) -> MetricReport:
    try:
        cv_scores = data.get("cv_scores")
        return MetricReport(
            model=data["model"],
            params=dict(data.get("params", {})),
            metrics=dict(data.get("metrics", {})),
            cv_mean=data["cv_mean"],
            test_score=data["test_score"],
            cv_scores=tuple(cv_scores) if cv_scores is not None else None,
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise TransitionError(f"malformed report mapping: {exc}") from exc


def metric_report_from_json(text: str) -> MetricReport:
    return metric_report_from_dict(json.loads(text))


def _policy_to_dict(policy: TransitionPolicy) -> dict:
    return {
        "satisfaction": dict(policy.satisfaction),
        "overfit_cv_std": policy.overfit_cv_std,
        "overfit_gap": policy.overfit_gap,
        "max_steps": policy.max_steps,
        "judge_on": policy.judge_on,
    }


def _policy_from_dict(data: Mapping[str, object]) -> TransitionPolicy:
    return TransitionPolicy(
        satisfaction=dict(data["satisfaction"]),
        overfit_cv_std=data["overfit_cv_std"],
        overfit_gap=data["overfit_gap"],
        max_steps=data["max_steps"],
        judge_on=data["judge_on"],
    )


def decision_to_dict(decision: TransitionDecision) -> dict:
    return {
        "kind": decision.kind.value,
        "reason": decision.reason.value,
        "next_model": decision.next_model,
        "best_so_far": (list(decision.best_so_far)
                        if decision.best_so_far is not None else None),
        "note": decision.note,
    }


def decision_from_dict(data: Mapping[str, object]) -> TransitionDecision:
    best = data.get("best_so_far")
    return TransitionDecision(
        kind=DecisionKind(data["kind"]),
        reason=DecisionReason(data["reason"]),
        next_model=data.get("next_model"),
        best_so_far=(best[0], float(best[1])) if best is not None
        else None,
        note=data.get("note", ""),
    )


def state_to_dict(state: SelectionState) -> dict:
    return {
        "recommendation": recommendation_to_dict(state.recommendation),
        "policy": _policy_to_dict(state.policy),
        "cursor": state.cursor,
        "history": [
            [metric_report_to_dict(report), decision_to_dict(decision)]
            for report, decision in state.history],
        "best_so_far": (list(state.best_so_far)
                        if state.best_so_far is not None else None),
    }


def state_from_dict(data: Mapping[str, object]) -> SelectionState:
    try:
        best = data.get("best_so_far")
        return SelectionState(
            recommendation=recommendation_from_dict(
                data["recommendation"]),
            policy=_policy_from_dict(data["policy"]),
            cursor=data["cursor"],
            history=tuple(
                (metric_report_from_dict(report),
                 decision_from_dict(decision))
                for report, decision in data["history"]),
            best_so_far=(best[0], float(best[1])) if best is not None
            else None,
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise TransitionError(f"malformed state mapping: {exc}") from exc


def state_to_json(state: SelectionState) -> str:
    return json.dumps(state_to_dict(state), indent=2) + "\n"


def state_from_json(text: str) -> SelectionState:
    return state_from_dict(json.loads(text))

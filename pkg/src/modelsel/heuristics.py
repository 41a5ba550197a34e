"""Recommendation engines, metric selection, and explanation traces.

Two engines produce ranked model lists from a dataset profile:

* ``recommend_gpt`` applies the rule set distilled from a large language
  model's selection behavior: a per-problem-type candidate pool, data-
  and resource-driven inclusion gates, and complexity-based ordering.
* ``recommend_cheatsheet`` walks the scikit-learn estimator-selection
  flowchart: sample-count and task-type branches with fixed outcomes.

Every decision lands in an ``ExplanationTrace`` so a recommendation can
always say why each candidate was included, excluded, or placed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from modelsel.catalog import (
    ModelCatalog,
    ModelCandidate,
    builtin_catalog,
)
from modelsel.profiler import (
    DatasetProfile,
    ProblemType,
    classify_problem,
)


class HeuristicsError(ValueError):
    """Base class for recommendation failures."""


class GetMoreDataError(HeuristicsError):
    """The cheat-sheet's first branch: the dataset is too small."""


class EmptyRecommendationError(HeuristicsError):
    """Every candidate was filtered out; the message lists the filters."""


# ---------------------------------------------------------------------------
# requirements and configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Requirements:
    """Caller-stated task requirements; all default to off/empty.

    ``ethical_flags`` are carried into the trace as inert annotations:
    no selection rule consumes them.  ``few_important_features`` steers
    the cheat-sheet's regression branch toward sparse models.
    """

    nonlinear_suspected: bool = False
    limited_resources: bool = False
    interpretability_required: bool = False
    multicollinearity_suspected: bool = False
    few_important_features: bool = False
    ethical_flags: frozenset[str] = frozenset()
    objective: str = ""


@dataclass(frozen=True)
class HeuristicConfig:
    """Thresholds behind the engines' numeric gates."""

    min_size_requirement: int = 50
    max_features_allowed: Optional[int] = None  # None = unlimited
    large_dataset_threshold: int = 50_000
    svm_row_limit: int = 10_000
    cheatsheet_100k_boundary: int = 100_000  # "fewer than" is strict

    def __post_init__(self) -> None:
        for name in ("min_size_requirement", "large_dataset_threshold",
                     "svm_row_limit", "cheatsheet_100k_boundary"):
            if getattr(self, name) <= 0:
                raise HeuristicsError(f"{name} must be > 0")
        if self.max_features_allowed is not None \
                and self.max_features_allowed <= 0:
            raise HeuristicsError("max_features_allowed must be > 0")

    @classmethod
    def from_dict(cls, data: dict) -> "HeuristicConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise HeuristicsError(
                f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**data)


# ---------------------------------------------------------------------------
# metric selection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricSet:
    metrics: tuple[str, ...]
    primary: str

    def __post_init__(self) -> None:
        if self.primary not in self.metrics:
            raise HeuristicsError(
                f"primary metric {self.primary!r} not in metric list")


_CLASSIFICATION_METRICS = ("accuracy", "precision", "recall", "f1",
                           "roc_auc")

_METRIC_TABLE: dict[ProblemType, MetricSet] = {
    ProblemType.BINARY_CLASSIFICATION: MetricSet(
        metrics=_CLASSIFICATION_METRICS, primary="roc_auc"),
    ProblemType.MULTICLASS_CLASSIFICATION: MetricSet(
        metrics=_CLASSIFICATION_METRICS, primary="accuracy"),
    ProblemType.REGRESSION: MetricSet(
        metrics=("rmse", "mae", "r2"), primary="r2"),
    ProblemType.CLUSTERING: MetricSet(
        metrics=("silhouette", "davies_bouldin", "calinski_harabasz"),
        primary="silhouette"),
    ProblemType.DIMENSIONALITY_REDUCTION: MetricSet(
        metrics=("reconstruction_error", "explained_variance_ratio"),
        primary="explained_variance_ratio"),
}


def select_metrics(problem_type: ProblemType) -> MetricSet:
    """The evaluation metrics appropriate to a problem type."""
    return _METRIC_TABLE[problem_type]


# ---------------------------------------------------------------------------
# explanation traces
# ---------------------------------------------------------------------------

class Verdict(Enum):
    FIRED = "fired"
    FILTERED_OUT = "filtered_out"
    ORDERED_BY = "ordered_by"


@dataclass(frozen=True)
class TraceEntry:
    rule_id: str
    verdict: Verdict
    subject: str
    rationale: str


@dataclass(frozen=True)
class ExplanationTrace:
    entries: tuple[TraceEntry, ...]

    def subjects(self) -> set[str]:
        return {e.subject for e in self.entries}

    def for_rule(self, rule_id: str) -> tuple[TraceEntry, ...]:
        return tuple(e for e in self.entries if e.rule_id == rule_id)


# ---------------------------------------------------------------------------
# recommendations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Recommendation:
    heuristic: str  # "GPT" | "CheatSheet"
    problem_type: ProblemType
    ranked: tuple[str, ...]
    metric_set: MetricSet
    trace: ExplanationTrace
    transition_notes: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.ranked:
            raise EmptyRecommendationError("ranked list must be non-empty")
        if len(set(self.ranked)) != len(self.ranked):
            raise HeuristicsError("ranked list contains duplicates")
        catalog = builtin_catalog()
        for name in self.ranked:
            if self.problem_type not in catalog.get(name).problem_types:
                raise HeuristicsError(
                    f"{name} does not support {self.problem_type.value}")
        missing = {
            c.name for c in catalog.matching(self.problem_type)
        } - self.trace.subjects()
        if missing:
            raise HeuristicsError(
                "trace is incomplete; no entry for: "
                + ", ".join(sorted(missing)))


# ---------------------------------------------------------------------------
# the pool-and-gates engine
# ---------------------------------------------------------------------------

_CLS_POOL = ("LogisticRegression", "DecisionTreeClassifier",
             "RandomForestClassifier", "GradientBoostingClassifier",
             "SVC", "NeuralNetwork")

GPT_POOLS: dict[ProblemType, tuple[str, ...]] = {
    ProblemType.BINARY_CLASSIFICATION: _CLS_POOL,
    ProblemType.MULTICLASS_CLASSIFICATION: _CLS_POOL,
    ProblemType.REGRESSION: (
        "LinearRegression", "Ridge", "Lasso", "SVR",
        "RandomForestRegressor", "GradientBoostingRegressor",
        "NeuralNetwork"),
    ProblemType.CLUSTERING: (
        "KMeans", "HierarchicalClustering", "DBSCAN", "GaussianMixture",
        "MeanShift"),
    ProblemType.DIMENSIONALITY_REDUCTION: (
        "PCA", "LDA", "TSNE", "Autoencoder"),
}

# rule identifiers used in traces (stable vocabulary)
RULE_PROBLEM_TYPE = "problem_type"
RULE_GPT_POOL = "gpt_pool"
RULE_DT_GATE = "decision_tree_nonlinear_gate"
RULE_NN_GATE = "neural_network_scale_gate"
RULE_SVM_LIMIT = "svm_row_limit"
RULE_LIMITED_RESOURCES = "limited_resources"
RULE_RIDGE_LASSO = "ridge_lasso_retention"
RULE_ORDER = "complexity_order"
RULE_ORDER_BLOCKS = "complexity_blocks"
RULE_DATASET_CHECK = "dataset_assumptions"
RULE_ETHICAL = "ethical_flags"


def _dataset_check_entries(profile: DatasetProfile,
                           cfg: HeuristicConfig) -> list[TraceEntry]:
    entries = []
    if profile.n_rows < cfg.min_size_requirement:
        entries.append(TraceEntry(
            rule_id=RULE_DATASET_CHECK, verdict=Verdict.FIRED,
            subject="dataset",
            rationale=(f"warning: {profile.n_rows} rows is below the "
                       f"minimum size requirement "
                       f"{cfg.min_size_requirement}")))
    if (cfg.max_features_allowed is not None
            and profile.n_columns > cfg.max_features_allowed):
        entries.append(TraceEntry(
            rule_id=RULE_DATASET_CHECK, verdict=Verdict.FIRED,
            subject="dataset",
            rationale=(f"warning: {profile.n_columns} columns exceeds "
                       f"the maximum features allowed "
                       f"{cfg.max_features_allowed}")))
    return entries


def _ethical_entries(reqs: Requirements) -> list[TraceEntry]:
    return [
        TraceEntry(
            rule_id=RULE_ETHICAL, verdict=Verdict.FIRED, subject=flag,
            rationale="carried as an annotation; no selection rule "
                      "consumes ethical flags")
        for flag in sorted(reqs.ethical_flags)]


def _gpt_keep(candidate: ModelCandidate, profile: DatasetProfile,
              reqs: Requirements, cfg: HeuristicConfig,
              ) -> tuple[bool, TraceEntry]:
    """Apply the inclusion gates to one pool member."""
    name = candidate.name
    if name == "DecisionTreeClassifier":
        if reqs.nonlinear_suspected:
            return True, TraceEntry(
                RULE_DT_GATE, Verdict.FIRED, name,
                "nonlinear relationships suspected; decision tree "
                "included for its nonlinear fit and interpretability")
        return False, TraceEntry(
            RULE_DT_GATE, Verdict.FILTERED_OUT, name,
            "included only when nonlinear relationships are suspected")
    if name == "NeuralNetwork":
        if not reqs.nonlinear_suspected:
            return False, TraceEntry(
                RULE_NN_GATE, Verdict.FILTERED_OUT, name,
                "included only when nonlinear relationships are "
                "suspected")
        if profile.n_rows < cfg.large_dataset_threshold:
            return False, TraceEntry(
                RULE_NN_GATE, Verdict.FILTERED_OUT, name,
                f"needs a large dataset: {profile.n_rows} rows < "
                f"large_dataset_threshold {cfg.large_dataset_threshold}")
        if reqs.limited_resources:
            return False, TraceEntry(
                RULE_NN_GATE, Verdict.FILTERED_OUT, name,
                "computational resources are limited; training a "
                "neural network is out of budget")
        return True, TraceEntry(
            RULE_NN_GATE, Verdict.FIRED, name,
            f"nonlinear relationships suspected and {profile.n_rows} "
            f"rows >= large_dataset_threshold "
            f"{cfg.large_dataset_threshold}")
    if name in ("SVC", "SVR"):
        if profile.n_rows > cfg.svm_row_limit:
            return False, TraceEntry(
                RULE_SVM_LIMIT, Verdict.FILTERED_OUT, name,
                f"n_rows > svm_row_limit: {profile.n_rows} > "
                f"{cfg.svm_row_limit}")
        if reqs.limited_resources:
            return False, TraceEntry(
                RULE_LIMITED_RESOURCES, Verdict.FILTERED_OUT, name,
                "computational resources are limited; kernel methods "
                "are dropped in favor of simpler models")
        return True, TraceEntry(
            RULE_SVM_LIMIT, Verdict.FIRED, name,
            f"within the row limit: {profile.n_rows} <= "
            f"{cfg.svm_row_limit}")
    if name in ("Ridge", "Lasso"):
        return True, TraceEntry(
            RULE_RIDGE_LASSO, Verdict.FIRED, name,
            "always retained for regression: regularized linear models "
            "handle correlated predictors")
    return True, TraceEntry(
        RULE_GPT_POOL, Verdict.FIRED, name,
        f"core candidate for {_pt_label(candidate.problem_types)}")


def _pt_label(kinds: frozenset[ProblemType]) -> str:
    return "/".join(sorted(k.value for k in kinds))


def _order_candidates(kept: list[ModelCandidate], catalog: ModelCatalog,
                      problem_type: ProblemType, reqs: Requirements,
                      ) -> tuple[list[ModelCandidate], str, str]:
    """Sort the surviving candidates; returns (ordered, rule_id, how)."""
    if (problem_type is ProblemType.REGRESSION
            and reqs.nonlinear_suspected):
        # complex-first reading for regressors under suspected
        # nonlinearity: candidates that can fit nonlinear structure on
        # mixed feature types lead, each block in ascending complexity
        def key(c: ModelCandidate):
            block = 0 if (c.nonlinear_capable
                          and c.handles_mixed_types) else 1
            return (block, c.complexity, -c.interpretability,
                    catalog.rank_of(c.name))
        return (sorted(kept, key=key), RULE_ORDER_BLOCKS,
                "nonlinear-capable mixed-type regressors first, then "
                "the rest, each block by ascending complexity")

    def key(c: ModelCandidate):
        return (c.complexity, -c.interpretability,
                catalog.rank_of(c.name))
    return (sorted(kept, key=key), RULE_ORDER,
            "ascending complexity, ties by interpretability then "
            "catalog order")


# rank-adjacent pairs the source rule treats as one jointly-considered
# set rather than two separate fallbacks
_JOINT_PAIRS = {
    ("RandomForestClassifier", "GradientBoostingClassifier"),
    ("RandomForestRegressor", "GradientBoostingRegressor"),
}


def _transition_notes(ranked: tuple[str, ...],
                      catalog: ModelCatalog) -> tuple[str, ...]:
    """One note per rank step describing why/when to move on."""
    if not ranked:
        return ()
    notes = [f"start with {ranked[0]}: the simplest candidate on the "
             f"list (complexity {catalog.get(ranked[0]).complexity})"]
    for prev, cur in zip(ranked, ranked[1:]):
        if (prev, cur) in _JOINT_PAIRS:
            notes.append(
                f"if {prev} underperforms, the rule names the set "
                f"{{{prev}, {cur}}} jointly; {cur} is ranked next")
        else:
            notes.append(
                f"if {prev} underperforms on the chosen metrics, move "
                f"to {cur}")
    return tuple(notes)


def recommend_gpt(profile: DatasetProfile,
                  reqs: Optional[Requirements] = None,
                  cfg: Optional[HeuristicConfig] = None,
                  problem_type: Optional[ProblemType] = None,
                  ) -> Recommendation:
    """Rank candidates with the pool-and-gates rule set.

    ``problem_type`` overrides classification of the profile; pass
    ``ProblemType.DIMENSIONALITY_REDUCTION`` explicitly to get that
    branch (it is never inferred).
    """
    reqs = reqs or Requirements()
    cfg = cfg or HeuristicConfig()
    catalog = builtin_catalog()
    pt = problem_type or classify_problem(profile)
    pool = GPT_POOLS[pt]

    entries: list[TraceEntry] = [TraceEntry(
        RULE_PROBLEM_TYPE, Verdict.FIRED, pt.value,
        f"profile classified as {pt.value}"
        + (f" (target {profile.target})" if profile.target else ""))]
    entries.extend(_dataset_check_entries(profile, cfg))

    for candidate in catalog.matching(pt):
        if candidate.name not in pool:
            entries.append(TraceEntry(
                RULE_GPT_POOL, Verdict.FILTERED_OUT, candidate.name,
                f"not part of the candidate pool for {pt.value}"))

    kept: list[ModelCandidate] = []
    for name in pool:
        candidate = catalog.get(name)
        keep, entry = _gpt_keep(candidate, profile, reqs, cfg)
        entries.append(entry)
        if keep:
            kept.append(candidate)

    if not kept:
        raise EmptyRecommendationError(
            "all candidates were filtered out; filters applied: "
            + "; ".join(f"{e.rule_id}({e.subject})"
                        for e in entries
                        if e.verdict is Verdict.FILTERED_OUT))

    ordered, order_rule, how = _order_candidates(kept, catalog, pt, reqs)
    for i, candidate in enumerate(ordered):
        entries.append(TraceEntry(
            order_rule, Verdict.ORDERED_BY, candidate.name,
            f"rank {i + 1}: complexity {candidate.complexity}, "
            f"interpretability {candidate.interpretability} ({how})"))

    entries.extend(_ethical_entries(reqs))
    ranked = tuple(c.name for c in ordered)
    return Recommendation(
        heuristic="GPT",
        problem_type=pt,
        ranked=ranked,
        metric_set=select_metrics(pt),
        trace=ExplanationTrace(entries=tuple(entries)),
        transition_notes=_transition_notes(ranked, catalog),
    )


# ---------------------------------------------------------------------------
# the cheat-sheet engine
# ---------------------------------------------------------------------------

RULE_CS_MIN_SAMPLES = "cs_min_samples"
RULE_CS_TASK = "cs_task_branch"
RULE_CS_100K = "cs_sample_count_branch"
RULE_CS_FEW_FEATURES = "cs_few_important_features"
RULE_CS_OUTCOME = "cs_outcome"
RULE_CS_SCOPE = "cs_scope"

_CS_CLASS_SMALL = ("LinearSVC", "KNeighborsClassifier", "SVC",
                   "EnsembleClassifiers")
_CS_CLASS_LARGE = ("SGDClassifier", "KernelApproximation")
_CS_REG_SMALL = ("Ridge", "SVR_linear", "SVR_rbf", "EnsembleRegressors")
_CS_REG_SPARSE = ("Lasso", "ElasticNet")
_CS_REG_LARGE = ("SGDRegressor",)
_CS_CLUSTERING = ("KMeans", "GaussianMixture", "MeanShift", "DBSCAN",
                  "HierarchicalClustering")
_CS_DIMRED = ("PCA", "TSNE")


def recommend_cheatsheet(profile: DatasetProfile,
                         cfg: Optional[HeuristicConfig] = None,
                         reqs: Optional[Requirements] = None,
                         problem_type: Optional[ProblemType] = None,
                         ) -> Recommendation:
    """Walk the estimator-selection flowchart for this profile.

    The outcome depends only on the problem type, the row count, and
    the configured boundaries (plus the optional few-important-features
    flag on the regression branch).
    """
    cfg = cfg or HeuristicConfig()
    reqs = reqs or Requirements()
    catalog = builtin_catalog()
    pt = problem_type or classify_problem(profile)
    n = profile.n_rows

    if n < cfg.min_size_requirement:
        raise GetMoreDataError(
            f"get more data: {n} rows is fewer than "
            f"{cfg.min_size_requirement}")

    entries: list[TraceEntry] = [TraceEntry(
        RULE_CS_MIN_SAMPLES, Verdict.FIRED, "dataset",
        f"{n} rows >= {cfg.min_size_requirement}: enough samples to "
        f"proceed")]

    boundary = cfg.cheatsheet_100k_boundary
    if pt in (ProblemType.BINARY_CLASSIFICATION,
              ProblemType.MULTICLASS_CLASSIFICATION):
        entries.append(TraceEntry(
            RULE_CS_TASK, Verdict.FIRED, pt.value,
            "predicting a category from labeled data: classification "
            "branch"))
        if n < boundary:
            entries.append(TraceEntry(
                RULE_CS_100K, Verdict.FIRED, "dataset",
                f"{n} < {boundary} samples: in-memory classifiers"))
            ranked = _CS_CLASS_SMALL
        else:
            entries.append(TraceEntry(
                RULE_CS_100K, Verdict.FIRED, "dataset",
                f"{n} >= {boundary} samples: out-of-core linear "
                f"classifier and kernel approximation"))
            ranked = _CS_CLASS_LARGE
    elif pt is ProblemType.REGRESSION:
        entries.append(TraceEntry(
            RULE_CS_TASK, Verdict.FIRED, pt.value,
            "predicting a quantity: regression branch"))
        if n >= boundary:
            entries.append(TraceEntry(
                RULE_CS_100K, Verdict.FIRED, "dataset",
                f"{n} >= {boundary} samples: out-of-core regressor"))
            ranked = _CS_REG_LARGE
        elif reqs.few_important_features:
            entries.append(TraceEntry(
                RULE_CS_FEW_FEATURES, Verdict.FIRED, "dataset",
                "few features expected to matter: sparse linear "
                "models"))
            ranked = _CS_REG_SPARSE
        else:
            entries.append(TraceEntry(
                RULE_CS_100K, Verdict.FIRED, "dataset",
                f"{n} < {boundary} samples: ridge and kernel "
                f"regressors"))
            ranked = _CS_REG_SMALL
    elif pt is ProblemType.CLUSTERING:
        entries.append(TraceEntry(
            RULE_CS_TASK, Verdict.FIRED, pt.value,
            "no labels, structure discovery: clustering branch"))
        ranked = _CS_CLUSTERING
    else:
        entries.append(TraceEntry(
            RULE_CS_TASK, Verdict.FIRED, pt.value,
            "just looking at structure: dimensionality-reduction "
            "branch"))
        ranked = _CS_DIMRED

    for i, name in enumerate(ranked):
        entries.append(TraceEntry(
            RULE_CS_OUTCOME, Verdict.ORDERED_BY, name,
            f"rank {i + 1} on the traversed path"))
    for candidate in catalog.matching(pt):
        if candidate.name not in ranked:
            entries.append(TraceEntry(
                RULE_CS_SCOPE, Verdict.FILTERED_OUT, candidate.name,
                "not an outcome of the traversed flowchart path"))
    entries.extend(_ethical_entries(reqs))

    notes = [f"start with {ranked[0]}"]
    for prev, cur in zip(ranked, ranked[1:]):
        notes.append(f"if {prev} is not working, try {cur}")

    return Recommendation(
        heuristic="CheatSheet",
        problem_type=pt,
        ranked=ranked,
        metric_set=select_metrics(pt),
        trace=ExplanationTrace(entries=tuple(entries)),
        transition_notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# rendering and serialization
# ---------------------------------------------------------------------------

def explain(rec: Recommendation) -> str:
    """Human-readable rendering of a recommendation and its trace."""
    lines = [
        f"heuristic: {rec.heuristic}",
        f"problem type: {rec.problem_type.value}",
        "ranked:",
    ]
    lines.extend(f"  {i + 1}. {name}"
                 for i, name in enumerate(rec.ranked))
    lines.append(
        "metrics: " + ", ".join(rec.metric_set.metrics)
        + f" (primary: {rec.metric_set.primary})")
    lines.append("trace:")
    lines.extend(
        f"  [{e.verdict.value}] {e.rule_id} / {e.subject}: {e.rationale}"
        for e in rec.trace.entries)
    lines.append("transition notes:")
    lines.extend(f"  - {note}" for note in rec.transition_notes)
    return "\n".join(lines) + "\n"


def recommendation_to_dict(rec: Recommendation) -> dict:
    return {
        "heuristic": rec.heuristic,
        "problem_type": rec.problem_type.value,
        "ranked": list(rec.ranked),
        "metric_set": {
            "metrics": list(rec.metric_set.metrics),
            "primary": rec.metric_set.primary,
        },
        "trace": [
            {
                "rule_id": e.rule_id,
                "verdict": e.verdict.value,
                "subject": e.subject,
                "rationale": e.rationale,
            }
            for e in rec.trace.entries],
        "transition_notes": list(rec.transition_notes),
    }


def recommendation_from_dict(data: dict) -> Recommendation:
    try:
        return _recommendation_from_dict(data)
    except (KeyError, TypeError, AttributeError) as exc:
        raise HeuristicsError(
            f"malformed recommendation mapping: {exc}") from exc


def _recommendation_from_dict(data: dict) -> Recommendation:
    return Recommendation(
        heuristic=data["heuristic"],
        problem_type=ProblemType(data["problem_type"]),
        ranked=tuple(data["ranked"]),
        metric_set=MetricSet(
            metrics=tuple(data["metric_set"]["metrics"]),
            primary=data["metric_set"]["primary"]),
        trace=ExplanationTrace(entries=tuple(
            TraceEntry(
                rule_id=e["rule_id"],
                verdict=Verdict(e["verdict"]),
                subject=e["subject"],
                rationale=e["rationale"])
            for e in data["trace"])),
        transition_notes=tuple(data["transition_notes"]),
    )


def recommendation_to_json(rec: Recommendation) -> str:
    return json.dumps(recommendation_to_dict(rec), indent=2) + "\n"


def recommendation_from_json(text: str) -> Recommendation:
    return recommendation_from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# prompt generation
# ---------------------------------------------------------------------------

_PROMPT_TEMPLATE = (
    "Given the attached dataset {{{name}}}, with the target variable in "
    "column {{'{target}'}}, and the objective of {objective}, identify "
    "the most suitable machine learning model(s) to solve this issue. "
    "Explain your choice(s) and the underlying modeling assumptions and "
    "factors that guided your decision. Outline your decision-making "
    "process in detail. If multiple models are viable, rank them in "
    "order of preference, and describe the criteria for transitioning "
    "from one model to another in the evaluation process."
)


def generate_prompt(profile: DatasetProfile, objective: str) -> str:
    """Fill the model-request template from a profile and an objective.

    The dataset name comes from ``profile.name`` (falling back to
    "dataset") and the target column from ``profile.target`` (empty for
    unsupervised tasks, where the objective does the explaining).
    """
    return _PROMPT_TEMPLATE.format(
        name=profile.name or "dataset",
        target=profile.target or "",
        objective=objective,
    )

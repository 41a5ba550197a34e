"""The model catalog: candidate algorithms and their selection attributes.

Each candidate carries the ordinal attributes the recommendation rules
read: complexity (1 simplest - 6 heaviest), interpretability (1 opaque -
3 transparent), overfitting_robustness (1 fragile - 3 robust), cost
(1 cheap - 3 expensive), plus capability booleans.  Catalog order is the
deterministic tie-breaker for equally ranked candidates, so the order of
``_TABLE`` is part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from modelsel.profiler import ProblemType

BINARY = ProblemType.BINARY_CLASSIFICATION
MULTI = ProblemType.MULTICLASS_CLASSIFICATION
REGR = ProblemType.REGRESSION
CLUST = ProblemType.CLUSTERING
DIMRED = ProblemType.DIMENSIONALITY_REDUCTION

CLASSIFICATION = frozenset({BINARY, MULTI})


class CatalogError(KeyError):
    """Lookup of a model name the catalog does not contain."""


@dataclass(frozen=True)
class ModelCandidate:
    name: str
    problem_types: frozenset[ProblemType]
    complexity: int          # 1-6
    interpretability: int    # 1-3
    handles_mixed_types: bool
    overfitting_robustness: int  # 1-3
    nonlinear_capable: bool
    cost: int                # 1-3

    def __post_init__(self) -> None:
        if not 1 <= self.complexity <= 6:
            raise ValueError(f"{self.name}: complexity out of range")
        if not 1 <= self.interpretability <= 3:
            raise ValueError(f"{self.name}: interpretability out of range")
        if not 1 <= self.overfitting_robustness <= 3:
            raise ValueError(
                f"{self.name}: overfitting_robustness out of range")
        if not 1 <= self.cost <= 3:
            raise ValueError(f"{self.name}: cost out of range")
        if not self.problem_types:
            raise ValueError(f"{self.name}: no problem types")


def _m(name: str, kinds: frozenset[ProblemType], complexity: int,
       interp: int, mixed: bool, robust: int, nonlinear: bool,
       cost: int) -> ModelCandidate:
    return ModelCandidate(
        name=name, problem_types=kinds, complexity=complexity,
        interpretability=interp, handles_mixed_types=mixed,
        overfitting_robustness=robust, nonlinear_capable=nonlinear,
        cost=cost)


# name, problem types, complexity, interpretability, mixed-type handling,
# overfitting robustness, nonlinear capability, cost
_TABLE: tuple[ModelCandidate, ...] = (
    _m("LogisticRegression", CLASSIFICATION, 1, 3, False, 2, False, 1),
    _m("RandomForestClassifier", CLASSIFICATION, 3, 1, True, 3, True, 2),
    _m("GradientBoostingClassifier", CLASSIFICATION, 4, 1, True, 1, True, 2),
    _m("SVC", CLASSIFICATION, 5, 1, False, 2, True, 3),
    _m("LinearSVC", CLASSIFICATION, 5, 1, False, 2, False, 2),
    _m("KNeighborsClassifier", CLASSIFICATION, 5, 2, False, 2, True, 2),
    _m("SGDClassifier", CLASSIFICATION, 2, 3, False, 2, False, 1),
    _m("DecisionTreeClassifier", CLASSIFICATION, 2, 3, True, 1, True, 1),
    _m("NeuralNetwork", CLASSIFICATION | {REGR}, 6, 1, False, 1, True, 3),
    _m("RandomForestRegressor", frozenset({REGR}), 3, 1, True, 3, True, 2),
    _m("GradientBoostingRegressor", frozenset({REGR}), 4, 1, True, 1, True, 2),
    _m("LinearRegression", frozenset({REGR}), 1, 3, False, 1, False, 1),
    _m("Ridge", frozenset({REGR}), 2, 3, False, 2, False, 1),
    _m("Lasso", frozenset({REGR}), 2, 3, False, 2, False, 1),
    _m("SVR", frozenset({REGR}), 5, 1, False, 2, True, 3),
    _m("KMeans", frozenset({CLUST}), 1, 3, False, 2, False, 1),
    _m("HierarchicalClustering", frozenset({CLUST}), 2, 2, False, 2, True, 2),
    _m("DBSCAN", frozenset({CLUST}), 2, 2, False, 2, True, 2),
    _m("GaussianMixture", frozenset({CLUST}), 3, 2, False, 2, True, 2),
    _m("MeanShift", frozenset({CLUST}), 3, 1, False, 2, True, 3),
    _m("PCA", frozenset({DIMRED}), 1, 3, False, 2, False, 1),
    _m("TSNE", frozenset({DIMRED}), 3, 1, False, 2, True, 3),
    _m("LDA", CLASSIFICATION | {DIMRED}, 1, 3, False, 2, False, 1),
    _m("QDA", CLASSIFICATION, 2, 2, False, 1, True, 1),
    _m("Autoencoder", frozenset({DIMRED}), 6, 1, False, 1, True, 3),
    _m("NaiveBayes", CLASSIFICATION, 1, 3, False, 2, False, 1),
    _m("PolynomialRegression", frozenset({REGR}), 2, 3, False, 1, True, 1),
    _m("ElasticNet", frozenset({REGR}), 2, 3, False, 2, False, 1),
    _m("SGDRegressor", frozenset({REGR}), 2, 3, False, 2, False, 1),
    # grouped and kernel-specific entries used by the cheat-sheet vocabulary
    _m("EnsembleClassifiers", CLASSIFICATION, 4, 1, True, 3, True, 2),
    _m("EnsembleRegressors", frozenset({REGR}), 4, 1, True, 3, True, 2),
    _m("KernelApproximation", CLASSIFICATION, 5, 1, False, 2, True, 2),
    _m("SVR_linear", frozenset({REGR}), 5, 1, False, 2, False, 2),
    _m("SVR_rbf", frozenset({REGR}), 5, 1, False, 2, True, 3),
)


@dataclass(frozen=True)
class ModelCatalog:
    candidates: tuple[ModelCandidate, ...]

    def __post_init__(self) -> None:
        names = [c.name for c in self.candidates]
        if len(names) != len(set(names)):
            raise ValueError("catalog names must be unique")

    def __iter__(self) -> Iterator[ModelCandidate]:
        return iter(self.candidates)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.candidates)

    def get(self, name: str) -> ModelCandidate:
        for candidate in self.candidates:
            if candidate.name == name:
                return candidate
        raise CatalogError(f"unknown model: {name}")

    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.candidates)

    def rank_of(self, name: str) -> int:
        """Position in catalog order; the deterministic tie-breaker."""
        for i, candidate in enumerate(self.candidates):
            if candidate.name == name:
                return i
        raise CatalogError(f"unknown model: {name}")

    def matching(self, problem_type: ProblemType,
                 ) -> tuple[ModelCandidate, ...]:
        return tuple(c for c in self.candidates
                     if problem_type in c.problem_types)


def builtin_catalog() -> ModelCatalog:
    """The fixed built-in catalog."""
    return ModelCatalog(candidates=_TABLE)


# grouped-name expansions: the cheat-sheet vocabulary names families
# that other surfaces spell out as concrete models
ENSEMBLE_EXPANSIONS: dict[str, tuple[str, ...]] = {
    "EnsembleClassifiers": (
        "RandomForestClassifier", "GradientBoostingClassifier"),
    "EnsembleRegressors": (
        "RandomForestRegressor", "GradientBoostingRegressor"),
}

# spelling aliases, resolved by problem type where ambiguous
_SVM_ALIAS = {
    BINARY: "SVC", MULTI: "SVC", REGR: "SVR",
}


def normalize_name(name: str,
                   problem_type: Optional[ProblemType] = None) -> str:
    """Fold alias spellings onto catalog names.

    ``SVM`` resolves to SVC or SVR by problem type; kernel-specific SVR
    spellings fold onto SVR.  Unknown names pass through unchanged.
    """
    if name == "SVM" and problem_type in _SVM_ALIAS:
        return _SVM_ALIAS[problem_type]
    if name in ("SVR_linear", "SVR_rbf"):
        return "SVR"
    if name in ("KNN", "KNearestNeighbors"):
        return "KNeighborsClassifier"
    return name

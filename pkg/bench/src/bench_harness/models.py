"""Estimator vocabulary and grid preparation.

Every runnable model name maps to a task family and a constructor;
seeded estimators get the spec's seed so reruns are reproducible.
Grid values pass through untouched except for known renames of
deprecated parameter spellings (SGD's loss 'log' -> 'log_loss').
"""

from __future__ import annotations

from typing import Callable, Dict, List, Mapping, Tuple

from sklearn.ensemble import (
    GradientBoostingClassifier,
    GradientBoostingRegressor,
    RandomForestClassifier,
    RandomForestRegressor,
)
from sklearn.linear_model import (
    ElasticNet,
    Lasso,
    LinearRegression,
    LogisticRegression,
    Ridge,
    SGDClassifier,
    SGDRegressor,
)
from sklearn.neighbors import KNeighborsClassifier
from sklearn.svm import SVC, SVR, LinearSVC
from sklearn.tree import DecisionTreeClassifier

from . import BenchError

CLASSIFIER = "classifier"
REGRESSOR = "regressor"

# name -> (family, constructor taking the run seed)
SUPPORTED_MODELS: Dict[str, Tuple[str, Callable]] = {
    "LogisticRegression": (
        CLASSIFIER, lambda seed: LogisticRegression(max_iter=1000)),
    "LinearSVC": (
        CLASSIFIER, lambda seed: LinearSVC(random_state=seed)),
    "KNeighborsClassifier": (
        CLASSIFIER, lambda seed: KNeighborsClassifier()),
    "SVC": (CLASSIFIER, lambda seed: SVC()),
    "RandomForestClassifier": (
        CLASSIFIER, lambda seed: RandomForestClassifier(random_state=seed)),
    "GradientBoostingClassifier": (
        CLASSIFIER,
        lambda seed: GradientBoostingClassifier(random_state=seed)),
    "SGDClassifier": (
        CLASSIFIER, lambda seed: SGDClassifier(random_state=seed)),
    "DecisionTreeClassifier": (
        CLASSIFIER, lambda seed: DecisionTreeClassifier(random_state=seed)),
    "LinearRegression": (REGRESSOR, lambda seed: LinearRegression()),
    "Ridge": (REGRESSOR, lambda seed: Ridge()),
    "Lasso": (REGRESSOR, lambda seed: Lasso()),
    "ElasticNet": (REGRESSOR, lambda seed: ElasticNet()),
    "SVR": (REGRESSOR, lambda seed: SVR()),
    "RandomForestRegressor": (
        REGRESSOR, lambda seed: RandomForestRegressor(random_state=seed)),
    "GradientBoostingRegressor": (
        REGRESSOR,
        lambda seed: GradientBoostingRegressor(random_state=seed)),
    "SGDRegressor": (
        REGRESSOR, lambda seed: SGDRegressor(random_state=seed)),
}

# deprecated grid-value spellings, per model and parameter
_VALUE_RENAMES: Dict[Tuple[str, str], Dict[object, object]] = {
    ("SGDClassifier", "loss"): {"log": "log_loss"},
}


def model_family(name: str) -> str:
    try:
        return SUPPORTED_MODELS[name][0]
    except KeyError:
        known = ", ".join(sorted(SUPPORTED_MODELS))
        raise BenchError(f"unknown model {name!r}; supported: {known}")


def build_estimator(name: str, seed: int):
    model_family(name)
    return SUPPORTED_MODELS[name][1](seed)


def prepare_grid(name: str, grid: Mapping[str, Tuple]) \
        -> Tuple[Dict[str, List], List[str]]:
    """Return (sklearn-ready grid, notes about applied renames)."""
    prepared: Dict[str, List] = {}
    notes: List[str] = []
    for param, values in grid.items():
        renames = _VALUE_RENAMES.get((name, param), {})
        out = []
        for value in values:
            if value in renames:
                notes.append(
                    f"{name}: {param}={value!r} is a deprecated spelling; "
                    f"using {renames[value]!r}")
                value = renames[value]
            out.append(value)
        prepared[param] = out
    return prepared, notes

"""Benchmark execution: split, grid-search, evaluate, emit reports.

Each model in the spec is fit with GridSearchCV on the training side of
a seeded split; the best candidate by cross-validation is then scored
on the held-out side. One report per model, in spec order, shaped
exactly like the metric-report wire format: {model, params, metrics,
cv_mean, cv_scores, test_score}. Values are rounded to four decimals so
reruns with the same spec and seed are byte-identical.
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd
from sklearn.compose import ColumnTransformer
from sklearn.exceptions import ConvergenceWarning
from sklearn.metrics import (
    accuracy_score,
    mean_absolute_error,
    mean_squared_error,
    precision_score,
    r2_score,
    recall_score,
    roc_auc_score,
)
from sklearn.model_selection import GridSearchCV, train_test_split
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import OneHotEncoder

from . import BenchError
from .models import CLASSIFIER, build_estimator, model_family, prepare_grid
from .specs import BenchmarkSpec

Logger = Optional[Callable[[str], None]]


def load_dataset(path: Path, target: str) \
        -> tuple[pd.DataFrame, pd.Series]:
    frame = pd.read_csv(path)
    if target not in frame.columns:
        columns = ", ".join(frame.columns)
        raise BenchError(
            f"target {target!r} is not a column of {path.name} "
            f"(columns: {columns})")
    return frame.drop(columns=[target]), frame[target]


def _pipeline(estimator, features: pd.DataFrame) -> Pipeline:
    # one-hot the non-numeric columns, pass the rest through untouched
    categorical = [name for name in features.columns
                   if not pd.api.types.is_numeric_dtype(features[name])]
    encode = ColumnTransformer(
        transformers=[("onehot",
                       OneHotEncoder(handle_unknown="ignore"),
                       categorical)],
        remainder="passthrough")
    return Pipeline([("encode", encode), ("model", estimator)])


def _round(value) -> float:
    return float(round(float(value), 4))


def _json_safe(value):
    if isinstance(value, np.generic):
        value = value.item()
    if value is None or isinstance(value, (str, bool, int, float)):
        return value
    return str(value)


def _positive_scores(fitted: Pipeline, features: pd.DataFrame,
                     positive) -> np.ndarray:
    if hasattr(fitted, "predict_proba"):
        column = list(fitted.classes_).index(positive)
        return fitted.predict_proba(features)[:, column]
    return fitted.decision_function(features)


def _classification_metrics(fitted: Pipeline, features: pd.DataFrame,
                            truth: pd.Series) -> Dict[str, float]:
    positive = fitted.classes_[1]
    predicted = fitted.predict(features)
    scores = _positive_scores(fitted, features, positive)
    return {
        "accuracy": _round(accuracy_score(truth, predicted)),
        "precision": _round(precision_score(
            truth, predicted, pos_label=positive, zero_division=0)),
        "recall": _round(recall_score(
            truth, predicted, pos_label=positive, zero_division=0)),
        "roc_auc": _round(roc_auc_score(
            (truth == positive).astype(int), scores)),
    }


def _regression_metrics(fitted: Pipeline, features: pd.DataFrame,
                        truth: pd.Series) -> Dict[str, float]:
    predicted = fitted.predict(features)
    return {
        "rmse": _round(np.sqrt(mean_squared_error(truth, predicted))),
        "mae": _round(mean_absolute_error(truth, predicted)),
        "r2": _round(r2_score(truth, predicted)),
    }


def run_benchmark(spec: BenchmarkSpec, jobs: Optional[int] = None,
                  log: Logger = None) -> List[dict]:
    """Run every model in the spec; one wire-format report each."""
    say = log if log is not None else (lambda message: None)
    features, target = load_dataset(spec.dataset, spec.target)
    x_train, x_test, y_train, y_test = train_test_split(
        features, target,
        test_size=spec.split.test_fraction,
        random_state=spec.seed,
        stratify=target if spec.split.stratified else None)

    reports: List[dict] = []
    for model_spec in spec.models:
        family = model_family(model_spec.name)
        grid, notes = prepare_grid(model_spec.name, model_spec.grid)
        for note in notes:
            say(note)
        search = GridSearchCV(
            _pipeline(build_estimator(model_spec.name, spec.seed),
                      features),
            {f"model__{param}": values for param, values in grid.items()},
            cv=5, n_jobs=jobs)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            search.fit(x_train, y_train)
            fitted = search.best_estimator_
            measure = _classification_metrics if family == CLASSIFIER \
                else _regression_metrics
            metrics = measure(fitted, x_test, y_test)
            test_score = _round(search.score(x_test, y_test))
        params = {param.removeprefix("model__"): _json_safe(value)
                  for param, value in search.best_params_.items()}
        reports.append({
            "model": model_spec.name,
            "params": params,
            "metrics": metrics,
            "cv_mean": _round(search.best_score_),
            "cv_scores": None,
            "test_score": test_score,
        })
        say(f"{model_spec.name}: best {params}, "
            f"cv_mean {reports[-1]['cv_mean']}, test {test_score}")
    return reports


# ---------------------------------------------------------------------------
# report files
# ---------------------------------------------------------------------------

def _write_atomic(path: Path, payload: dict | list) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    handle = tempfile.NamedTemporaryFile(
        "w", dir=path.parent, suffix=".part", delete=False)
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        os.unlink(handle.name)
        raise


def write_reports(reports: List[dict], out: str | Path,
                  spec: BenchmarkSpec) -> List[Path]:
    """Write reports atomically.

    A directory target (existing, or spelled with a trailing slash)
    gets one bare report file per model — each directly usable as a
    session observation. Any other target becomes a single envelope
    file {dataset, seed, reports}.
    """
    as_directory = str(out).endswith(os.sep) or Path(out).is_dir()
    out = Path(out)
    if as_directory:
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for report in reports:
            path = out / f"{report['model']}.json"
            _write_atomic(path, report)
            written.append(path)
        return written
    out.parent.mkdir(parents=True, exist_ok=True)
    _write_atomic(out, {"dataset": spec.dataset.name,
                        "seed": spec.seed,
                        "reports": reports})
    return [out]


def read_reports(path: str | Path) -> List[dict]:
    """Read reports back from an envelope file, a bare report file, a
    JSON list, or a directory of such files."""
    path = Path(path)
    if path.is_dir():
        reports: List[dict] = []
        for child in sorted(path.glob("*.json")):
            reports.extend(read_reports(child))
        return reports
    data = json.loads(path.read_text())
    if isinstance(data, list):
        return data
    if isinstance(data, dict) and "reports" in data:
        return list(data["reports"])
    if isinstance(data, dict) and "model" in data:
        return [data]
    raise BenchError(f"{path.name} holds no recognizable reports")

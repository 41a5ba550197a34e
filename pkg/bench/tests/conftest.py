import json
from pathlib import Path

import pytest

from bench_harness.runner import run_benchmark
from bench_harness.specs import spec_from_dict

BENCH = Path(__file__).resolve().parents[1]
ROOT = BENCH.parent
SPECS = BENCH / "specs"
DATA = ROOT / "data"
DOCS = ROOT / "docs"
FIXTURES = ROOT / "fixtures"


def tiny_classification_dict() -> dict:
    return {
        "dataset": str(DATA / "heart_synthetic.csv"),
        "target": "DEATH_EVENT",
        "split": {"test_fraction": 0.2, "stratified": True},
        "seed": 42,
        "models": [
            {"name": "LogisticRegression", "grid": {"C": [0.1, 5]}},
            {"name": "RandomForestClassifier",
             "grid": {"max_depth": [5], "n_estimators": [10]}},
        ],
    }


def tiny_regression_dict() -> dict:
    return {
        "dataset": str(DATA / "cars_synthetic.csv"),
        "target": "selling_price",
        "split": {"test_fraction": 0.2, "stratified": False},
        "seed": 42,
        "models": [
            {"name": "Ridge", "grid": {"alpha": [0.1, 10]}},
            {"name": "LinearRegression", "grid": {}},
        ],
    }


@pytest.fixture(scope="session")
def classification_reports():
    return run_benchmark(spec_from_dict(tiny_classification_dict()))


@pytest.fixture(scope="session")
def regression_reports():
    return run_benchmark(spec_from_dict(tiny_regression_dict()))


def load_reference_heart_reports() -> dict:
    """The transcribed heart reports, keyed by model name."""
    document = json.loads(
        (FIXTURES / "reference_metrics" / "heart.json").read_text())
    return {entry["model"]: entry for entry in document["reports"]}

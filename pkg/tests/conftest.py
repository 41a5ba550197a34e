"""Shared fixtures: bundled profiles, reference reports, and paths."""

import json
from pathlib import Path

import pytest

from modelsel.profiler import profile_from_json
from modelsel.transition import metric_report_from_dict

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
DATA = ROOT / "data"
DOCS = ROOT / "docs"


@pytest.fixture(scope="session")
def heart_profile():
    return profile_from_json(
        (FIXTURES / "heart.profile.json").read_text())


@pytest.fixture(scope="session")
def diabetes_profile():
    return profile_from_json(
        (FIXTURES / "diabetes.profile.json").read_text())


@pytest.fixture(scope="session")
def cars_profile():
    return profile_from_json(
        (FIXTURES / "cars.profile.json").read_text())


def load_reference_reports(name):
    """Reference reports for one dataset, keyed by model name."""
    document = json.loads(
        (FIXTURES / "reference_metrics" / f"{name}.json").read_text())
    return {entry["model"]: metric_report_from_dict(entry)
            for entry in document["reports"]}


@pytest.fixture(scope="session")
def heart_reports():
    return load_reference_reports("heart")

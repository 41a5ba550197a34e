"""JSON schemas in docs/ match what the library actually emits."""

import json

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from modelsel.heuristics import (
    Requirements,
    recommend_cheatsheet,
    recommend_gpt,
    recommendation_to_dict,
)
from modelsel.profiler import profile_to_dict
from modelsel.transition import (
    TransitionPolicy,
    init_session,
    metric_report_to_dict,
    observe,
    state_to_dict,
)

from .conftest import DOCS, FIXTURES


def _load(name):
    return json.loads((DOCS / f"{name}.schema.json").read_text())


SCHEMAS = {name: _load(name) for name in (
    "profile", "recommendation", "metric_report", "selection_state")}

REGISTRY = Registry().with_resources(
    (schema["$id"], Resource.from_contents(schema))
    for schema in SCHEMAS.values())


def validator(name):
    return Draft202012Validator(SCHEMAS[name], registry=REGISTRY)


def test_schemas_are_well_formed():
    for schema in SCHEMAS.values():
        Draft202012Validator.check_schema(schema)


def test_bundled_profiles_validate():
    check = validator("profile")
    for name in ("heart", "diabetes", "cars"):
        data = json.loads(
            (FIXTURES / f"{name}.profile.json").read_text())
        check.validate(data)


def test_emitted_profiles_validate(heart_profile):
    validator("profile").validate(profile_to_dict(heart_profile))


def test_profile_schema_rejects_extras(heart_profile):
    data = profile_to_dict(heart_profile)
    data["n_classes"] = 2
    with pytest.raises(Exception):
        validator("profile").validate(data)


def test_recommendations_validate(heart_profile, diabetes_profile,
                                  cars_profile):
    check = validator("recommendation")
    nonlinear = Requirements(nonlinear_suspected=True)
    for rec in (
        recommend_gpt(heart_profile),
        recommend_gpt(diabetes_profile, nonlinear),
        recommend_gpt(cars_profile, nonlinear),
        recommend_cheatsheet(heart_profile),
        recommend_cheatsheet(diabetes_profile),
        recommend_cheatsheet(cars_profile),
    ):
        check.validate(recommendation_to_dict(rec))


def test_reference_reports_validate():
    check = validator("metric_report")
    for name in ("heart", "diabetes", "cars"):
        document = json.loads(
            (FIXTURES / "reference_metrics" / f"{name}.json").read_text())
        for entry in document["reports"]:
            check.validate(entry)


def test_report_schema_requires_cv_mean(heart_reports):
    data = metric_report_to_dict(heart_reports["LogisticRegression"])
    del data["cv_mean"]
    with pytest.raises(Exception):
        validator("metric_report").validate(data)


def test_session_states_validate(heart_profile, heart_reports):
    rec = recommend_gpt(heart_profile)
    policy = TransitionPolicy.from_dict(
        {"satisfaction": {"roc_auc": 0.90}, "max_steps": 3})
    state = init_session(rec, policy)
    check = validator("selection_state")
    check.validate(state_to_dict(state))
    for model in ("LogisticRegression", "RandomForestClassifier",
                  "GradientBoostingClassifier"):
        state, _ = observe(state, heart_reports[model])
        check.validate(state_to_dict(state))

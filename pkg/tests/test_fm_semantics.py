"""Validation and enumeration semantics for feature models."""

import dataclasses

import pytest
from hypothesis import given, settings

from modelsel.feature_model import (
    Atom,
    ChildGroup,
    Configuration,
    Constraint,
    Feature,
    FeatureModel,
    GroupKind,
    ModelTooLargeError,
    Not,
    UnknownAtomError,
    ViolationKind,
    enumerate_configurations,
    eval_formula,
    feature_names,
    parse_model,
    validate_configuration,
)
from tests.strategies import configurations, feature_models

CAR = parse_model("""
features Car {
    mandatory Engine {
        xor {
            Petrol
            Electric
        }
    }
    optional Sunroof
    or {
        Radio
        Navigation
    }
}

constraint electric_nav: Electric => Navigation
""")


def cfg(*names: str) -> Configuration:
    return Configuration(names)


def kinds(report) -> list[ViolationKind]:
    return [v.kind for v in report.violations]


# ---------------------------------------------------------------------------
# validate_configuration
# ---------------------------------------------------------------------------

def test_valid_configuration_passes():
    report = validate_configuration(
        CAR, cfg("Car", "Engine", "Petrol", "Radio"))
    assert report.valid
    assert report.violations == ()


def test_all_violations_are_collected():
    report = validate_configuration(CAR, cfg("Sunroof", "Ghost"))
    assert kinds(report) == [
        ViolationKind.UNKNOWN_FEATURE,
        ViolationKind.ROOT_MISSING,
        ViolationKind.DANGLING_CHILD,
    ]
    assert report.violations[0].subject == "Ghost"
    assert report.violations[2].subject == "Sunroof"


def test_unknown_features_come_sorted():
    report = validate_configuration(
        CAR, cfg("Car", "Engine", "Petrol", "Radio", "Zed", "Alpha"))
    assert [v.subject for v in report.violations] == ["Alpha", "Zed"]
    assert set(kinds(report)) == {ViolationKind.UNKNOWN_FEATURE}


def test_mandatory_missing():
    report = validate_configuration(CAR, cfg("Car", "Radio"))
    assert kinds(report) == [ViolationKind.MANDATORY_MISSING]
    assert report.violations[0].subject == "Engine"


def test_xor_requires_exactly_one():
    none = validate_configuration(CAR, cfg("Car", "Engine", "Radio"))
    both = validate_configuration(
        CAR, cfg("Car", "Engine", "Petrol", "Electric", "Radio"))
    assert kinds(none) == [ViolationKind.XOR_VIOLATION]
    assert kinds(both) == [
        ViolationKind.XOR_VIOLATION, ViolationKind.CONSTRAINT_FAILED]
    assert both.violations[0].subject == "Engine"


def test_or_requires_at_least_one():
    report = validate_configuration(CAR, cfg("Car", "Engine", "Petrol"))
    assert kinds(report) == [ViolationKind.OR_VIOLATION]
    assert report.violations[0].subject == "Car"


def test_dangling_child_per_selected_member():
    report = validate_configuration(
        CAR, cfg("Car", "Engine", "Petrol", "Radio", "Navigation",
                 "Sunroof"))
    assert report.valid
    dangling = validate_configuration(
        CAR, cfg("Car", "Engine", "Petrol", "Electric", "Radio"))
    assert ViolationKind.XOR_VIOLATION in kinds(dangling)


def test_constraint_failures_report_in_declaration_order():
    fm = parse_model(
        "features R { optional A optional B }\n"
        "constraint first: A\nconstraint second: B")
    report = validate_configuration(fm, cfg("R"))
    assert [v.subject for v in report.violations] == ["first", "second"]
    assert set(kinds(report)) == {ViolationKind.CONSTRAINT_FAILED}


def test_violation_details_are_readable():
    report = validate_configuration(CAR, cfg("Car", "Engine"))
    details = [v.detail for v in report.violations]
    assert any("exactly one of {Petrol, Electric}" in d for d in details)
    assert any("at least one of {Radio, Navigation}" in d for d in details)


# ---------------------------------------------------------------------------
# eval_formula
# ---------------------------------------------------------------------------

def test_eval_formula_checks_declared_names():
    with pytest.raises(UnknownAtomError):
        eval_formula(Atom("Ghost"), cfg("A"), declared={"A"})
    assert eval_formula(Not(operand=Atom("Ghost")), cfg("A")) is True


# ---------------------------------------------------------------------------
# enumerate_configurations
# ---------------------------------------------------------------------------

def test_enumeration_order_is_ascending_masks():
    fm = parse_model("features R { optional A optional B }")
    got = [sorted(c.selected) for c in enumerate_configurations(fm)]
    assert got == [["R"], ["A", "R"], ["B", "R"], ["A", "B", "R"]]


def test_enumeration_respects_limit():
    fm = parse_model("features R { optional A optional B }")
    full = enumerate_configurations(fm)
    assert enumerate_configurations(fm, limit=2) == full[:2]
    assert enumerate_configurations(fm, limit=0) == []


def test_enumeration_counts_for_known_model():
    # xor picks exactly 1 of 2, or picks 1..3 of 3, sunroof free:
    # 2 * 7 * 2 = 28
    fm = parse_model("""
    features R {
        xor { A B }
        or { C D E }
        optional S
    }
    """)
    assert len(enumerate_configurations(fm)) == 28


def test_enumeration_refuses_large_models():
    leaves = "\n".join(f"    optional L{i}" for i in range(25))
    fm = parse_model("features R {\n" + leaves + "\n}")
    assert len(feature_names(fm)) == 26
    with pytest.raises(ModelTooLargeError):
        enumerate_configurations(fm)


def test_enumeration_boundary_24_features_is_allowed():
    # 23 optional leaves + root = 24 features, one constraint pinning
    # all but two leaves off keeps the result tiny
    leaves = "\n".join(f"    optional L{i}" for i in range(23))
    pins = " & ".join(f"!L{i}" for i in range(2, 23))
    fm = parse_model(
        "features R {\n" + leaves + "\n}\nconstraint pin: " + pins)
    got = enumerate_configurations(fm, limit=8)
    assert [sorted(c.selected) for c in got[:4]] == [
        ["R"], ["L0", "R"], ["L1", "R"], ["L0", "L1", "R"]]


# ---------------------------------------------------------------------------
# route agreement: bitmask enumeration vs set-based validation
# ---------------------------------------------------------------------------

def exhaustive_check(fm) -> None:
    names = feature_names(fm)
    enumerated = set(enumerate_configurations(fm))
    for mask in range(1 << len(names)):
        picked = Configuration(
            names[i] for i in range(len(names)) if mask >> i & 1)
        assert validate_configuration(fm, picked).valid == (
            picked in enumerated)


def test_routes_agree_on_car_model():
    exhaustive_check(CAR)


@settings(max_examples=120, deadline=None)
@given(feature_models(max_features=8))
def test_routes_agree_property(fm):
    exhaustive_check(fm)


# ---------------------------------------------------------------------------
# violation monotonicity under added constraints
# ---------------------------------------------------------------------------

@settings(max_examples=120, deadline=None)
@given(feature_models(max_features=8, max_constraints=2))
def test_adding_constraints_never_hides_violations(fm):
    names = list(feature_names(fm))
    picked = Configuration(names[::2])
    before = validate_configuration(fm, picked)
    extended = dataclasses.replace(
        fm,
        constraints=fm.constraints + (
            Constraint(name="extra", formula=Not(operand=Atom(names[0]))),))
    after = validate_configuration(extended, picked)
    assert after.violations[:len(before.violations)] == before.violations
    assert len(after.violations) >= len(before.violations)


@settings(max_examples=120, deadline=None)
@given(feature_models(max_features=10))
def test_enumerated_configurations_all_validate(fm):
    for picked in enumerate_configurations(fm, limit=64):
        assert validate_configuration(fm, picked).valid


# ---------------------------------------------------------------------------
# structural checks on direct construction
# ---------------------------------------------------------------------------

def test_duplicate_names_rejected_even_across_branches():
    with pytest.raises(ValueError):
        FeatureModel(root=Feature(
            name="R",
            groups=(
                ChildGroup(kind=GroupKind.OPTIONAL,
                           members=(Feature(name="A"),)),
                ChildGroup(kind=GroupKind.OPTIONAL,
                           members=(Feature(name="A"),)),
            )))


@settings(max_examples=120, deadline=None)
@given(feature_models(max_features=8))
def test_random_configurations_validate_consistently(fm):
    # validation is a pure function: same input, same report
    names = list(feature_names(fm))
    picked = Configuration(names[1::2])
    first = validate_configuration(fm, picked)
    second = validate_configuration(fm, picked)
    assert first == second

"""Parser, printer, and round-trip tests for the feature-model DSL."""

import pytest
from hypothesis import given, settings

from modelsel.feature_model import (
    And,
    Atom,
    ChildGroup,
    Configuration,
    Constraint,
    DuplicateNameError,
    Feature,
    FeatureModel,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    UnknownAtomError,
    eval_formula,
    format_formula,
    format_model,
    parse_formula,
    parse_model,
)
from tests.strategies import feature_models, formulas

BASIC = """
features Root {
    mandatory Engine
    optional Trim {
        xor {
            Sport
            Comfort
        }
    }
    or {
        Radio
        Navigation
    }
}

constraint sporty: Sport => Radio & Navigation
constraint trim_rule: !Comfort | (Engine <=> Navigation)
"""


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def test_parse_tree_shape():
    fm = parse_model(BASIC)
    assert fm.root.name == "Root"
    kinds = [g.kind for g in fm.root.groups]
    assert kinds == [GroupKind.MANDATORY, GroupKind.OPTIONAL, GroupKind.OR]
    trim = fm.root.groups[1].members[0]
    assert trim.name == "Trim"
    assert trim.groups[0].kind == GroupKind.XOR
    assert [m.name for m in trim.groups[0].members] == ["Sport", "Comfort"]


def test_parse_constraints():
    fm = parse_model(BASIC)
    assert [c.name for c in fm.constraints] == ["sporty", "trim_rule"]
    assert fm.constraints[0].formula == Implies(
        lhs=Atom("Sport"),
        rhs=And(lhs=Atom("Radio"), rhs=Atom("Navigation")))


def test_leaf_root_and_comments():
    fm = parse_model("# only a root\nfeatures Solo  # trailing comment\n")
    assert fm.root == Feature(name="Solo")
    assert fm.constraints == ()


def test_keywords_are_reserved():
    with pytest.raises(ParseError):
        parse_model("features xor")


# ---------------------------------------------------------------------------
# operator precedence and associativity
# ---------------------------------------------------------------------------

DECLARED = {"a", "b", "c"}


def test_and_binds_tighter_than_or():
    assert parse_formula("a & b | c", DECLARED) == Or(
        lhs=And(lhs=Atom("a"), rhs=Atom("b")), rhs=Atom("c"))


def test_not_binds_tighter_than_and():
    assert parse_formula("!a & b", DECLARED) == And(
        lhs=Not(operand=Atom("a")), rhs=Atom("b"))


def test_implies_is_right_associative():
    assert parse_formula("a => b => c", DECLARED) == Implies(
        lhs=Atom("a"), rhs=Implies(lhs=Atom("b"), rhs=Atom("c")))


def test_iff_is_right_associative():
    assert parse_formula("a <=> b <=> c", DECLARED) == Iff(
        lhs=Atom("a"), rhs=Iff(lhs=Atom("b"), rhs=Atom("c")))


def test_implies_binds_tighter_than_iff():
    assert parse_formula("a <=> b => c", DECLARED) == Iff(
        lhs=Atom("a"), rhs=Implies(lhs=Atom("b"), rhs=Atom("c")))


def test_or_is_left_associative():
    assert parse_formula("a | b | c", DECLARED) == Or(
        lhs=Or(lhs=Atom("a"), rhs=Atom("b")), rhs=Atom("c"))


def test_parens_override_precedence():
    assert parse_formula("(a | b) & c", DECLARED) == And(
        lhs=Or(lhs=Atom("a"), rhs=Atom("b")), rhs=Atom("c"))


def test_double_negation_is_kept():
    assert parse_formula("!!a", DECLARED) == Not(operand=Not(operand=Atom("a")))


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------

def test_syntax_error_carries_position_and_expectations():
    with pytest.raises(ParseError) as exc:
        parse_model("features Root {\n    mandatory\n}")
    err = exc.value
    assert (err.line, err.column) == (3, 1)
    assert "an identifier" in err.expected
    assert "3:1" in str(err)


def test_unexpected_character_is_rejected():
    with pytest.raises(ParseError) as exc:
        parse_model("features Root $")
    assert "'$'" in str(exc.value)


def test_missing_brace_is_reported():
    with pytest.raises(ParseError):
        parse_model("features Root { mandatory A")


def test_duplicate_feature_name():
    with pytest.raises(DuplicateNameError) as exc:
        parse_model("features Root { optional A optional A }")
    assert "duplicate feature name A" in str(exc.value)


def test_duplicate_constraint_name():
    with pytest.raises(DuplicateNameError):
        parse_model(
            "features R { optional A }\n"
            "constraint c: A\nconstraint c: !A")


def test_unknown_atom_in_constraint():
    with pytest.raises(UnknownAtomError) as exc:
        parse_model("features R { optional A }\nconstraint c: A & Ghost")
    assert "Ghost" in str(exc.value)


def test_xor_group_needs_two_members():
    with pytest.raises(ParseError) as exc:
        parse_model("features R { xor { A } }")
    assert "at least two members" in str(exc.value)


def test_trailing_garbage_is_rejected():
    with pytest.raises(ParseError):
        parse_model("features R R2")


def test_direct_construction_checks_arity():
    with pytest.raises(ValueError):
        FeatureModel(root=Feature(
            name="R",
            groups=(ChildGroup(kind=GroupKind.XOR,
                               members=(Feature(name="A"),)),)))


def test_direct_construction_checks_atoms():
    with pytest.raises(UnknownAtomError):
        FeatureModel(
            root=Feature(name="R"),
            constraints=(Constraint(name="c", formula=Atom("Ghost")),))


# ---------------------------------------------------------------------------
# printing and round-trips
# ---------------------------------------------------------------------------

def test_format_minimal_parentheses():
    cases = [
        ("a & b | c", "a & b | c"),
        ("(a | b) & c", "(a | b) & c"),
        ("a => b => c", "a => b => c"),
        ("(a => b) => c", "(a => b) => c"),
        ("!(a & b)", "!(a & b)"),
        ("!a & b", "!a & b"),
        ("a <=> (b => c)", "a <=> b => c"),
    ]
    for source, expected in cases:
        assert format_formula(parse_formula(source, DECLARED)) == expected


def test_format_model_is_stable():
    fm = parse_model(BASIC)
    text = format_model(fm)
    assert parse_model(text) == fm
    assert format_model(parse_model(text)) == text


@settings(max_examples=150)
@given(feature_models(max_features=10))
def test_model_round_trip_property(fm):
    assert parse_model(format_model(fm)) == fm


@settings(max_examples=150)
@given(formulas(["a", "b", "c", "d", "e"]))
def test_formula_round_trip_property(formula):
    assert parse_formula(format_formula(formula), set("abcde")) == formula


def _to_python(formula) -> str:
    # fully parenthesized translation, used as an independent evaluator
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        return f"(not {_to_python(formula.operand)})"
    if isinstance(formula, And):
        return f"({_to_python(formula.lhs)} and {_to_python(formula.rhs)})"
    if isinstance(formula, Or):
        return f"({_to_python(formula.lhs)} or {_to_python(formula.rhs)})"
    if isinstance(formula, Implies):
        return f"((not {_to_python(formula.lhs)}) or {_to_python(formula.rhs)})"
    if isinstance(formula, Iff):
        return f"({_to_python(formula.lhs)} == {_to_python(formula.rhs)})"
    raise TypeError(formula)


@settings(max_examples=100)
@given(formulas(["a", "b", "c", "d", "e"]))
def test_eval_formula_agrees_with_python_truth_table(formula):
    text = _to_python(formula)
    for mask in range(32):
        env = {name: bool(mask >> i & 1)
               for i, name in enumerate("abcde")}
        expected = eval(text, {"__builtins__": {}}, env)  # noqa: S307
        got = eval_formula(formula, Configuration(
            n for n, v in env.items() if v))
        assert got == bool(expected)

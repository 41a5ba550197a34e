"""Feature-tree DSL: parse, print, evaluate, validate, and enumerate.

A feature model is a tree of named features plus named cross-tree
constraints written as propositional formulas over feature names.  A
configuration (set of selected feature names) is valid when it satisfies
the tree's group semantics and every constraint.
"""

from modelsel.feature_model.types import (
    And,
    Atom,
    ChildGroup,
    Configuration,
    Constraint,
    DuplicateNameError,
    Feature,
    FeatureModel,
    FeatureModelError,
    Formula,
    GroupKind,
    Iff,
    Implies,
    ModelTooLargeError,
    Not,
    Or,
    ParseError,
    UnknownAtomError,
    ValidationReport,
    Violation,
    ViolationKind,
)
from modelsel.feature_model.parser import parse_model, parse_formula
from modelsel.feature_model.printer import format_model, format_formula
from modelsel.feature_model.semantics import (
    enumerate_configurations,
    eval_formula,
    feature_names,
    validate_configuration,
)

__all__ = [
    "And",
    "Atom",
    "ChildGroup",
    "Configuration",
    "Constraint",
    "DuplicateNameError",
    "Feature",
    "FeatureModel",
    "FeatureModelError",
    "Formula",
    "GroupKind",
    "Iff",
    "Implies",
    "ModelTooLargeError",
    "Not",
    "Or",
    "ParseError",
    "UnknownAtomError",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "enumerate_configurations",
    "eval_formula",
    "feature_names",
    "format_formula",
    "format_model",
    "parse_formula",
    "parse_model",
    "validate_configuration",
]

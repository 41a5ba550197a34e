"""Evaluation, validation, and enumeration for feature models.

Validation and enumeration are deliberately independent implementations:
``validate_configuration`` reasons over name sets following the tree,
while ``enumerate_configurations`` compiles the whole model into a single
bitmask predicate and scans the mask space.  Their agreement is checked
exhaustively in the test suite.
"""

from __future__ import annotations

from typing import AbstractSet, Container, Iterable, Optional, Union

from modelsel.feature_model.printer import format_formula
from modelsel.feature_model.types import (
    And,
    Atom,
    Configuration,
    Feature,
    FeatureModel,
    Formula,
    GroupKind,
    Iff,
    Implies,
    ModelTooLargeError,
    Not,
    Or,
    UnknownAtomError,
    ValidationReport,
    Violation,
    ViolationKind,
)

MAX_ENUMERABLE_FEATURES = 24


def feature_names(model: FeatureModel) -> tuple[str, ...]:
    """All feature names in pre-order: parent before children, groups and
    members in declaration order."""
    names: list[str] = []

    def walk(feature: Feature) -> None:
        names.append(feature.name)
        for group in feature.groups:
            for member in group.members:
                walk(member)

    walk(model.root)
    return tuple(names)


# ---------------------------------------------------------------------------
# formula evaluation
# ---------------------------------------------------------------------------

def eval_formula(formula: Formula,
                 config: Union[Configuration, Container[str]],
                 declared: Optional[AbstractSet[str]] = None) -> bool:
    """Truth value of ``formula`` when exactly ``config`` is selected.

    When ``declared`` is given, atoms outside it raise
    ``UnknownAtomError`` instead of silently evaluating to false.
    """
    if isinstance(formula, Atom):
        if declared is not None and formula.name not in declared:
            raise UnknownAtomError(
                f"formula references undeclared feature {formula.name}")
        return formula.name in config
    if isinstance(formula, Not):
        return not eval_formula(formula.operand, config, declared)
    if isinstance(formula, And):
        return (eval_formula(formula.lhs, config, declared)
                and eval_formula(formula.rhs, config, declared))
    if isinstance(formula, Or):
        return (eval_formula(formula.lhs, config, declared)
                or eval_formula(formula.rhs, config, declared))
    if isinstance(formula, Implies):
        return (not eval_formula(formula.lhs, config, declared)
                or eval_formula(formula.rhs, config, declared))
    if isinstance(formula, Iff):
        return (eval_formula(formula.lhs, config, declared)
                == eval_formula(formula.rhs, config, declared))
    raise TypeError(f"not a formula node: {formula!r}")


# ---------------------------------------------------------------------------
# validation (set route)
# ---------------------------------------------------------------------------

def validate_configuration(model: FeatureModel,
                           config: Configuration) -> ValidationReport:
    """Check ``config`` against the tree and all constraints.

    Every broken rule is reported, in a deterministic order: unknown
    features (sorted by name), then a missing root, then tree violations
    in pre-order, then failed constraints in declaration order.
    """
    violations: list[Violation] = []
    declared = set(feature_names(model))
    selected = config.selected

    for name in sorted(selected - declared):
        violations.append(Violation(
            kind=ViolationKind.UNKNOWN_FEATURE,
            subject=name,
            detail=f"{name} is selected but not declared in the model"))

    if model.root.name not in selected:
        violations.append(Violation(
            kind=ViolationKind.ROOT_MISSING,
            subject=model.root.name,
            detail=f"root feature {model.root.name} must always be selected"))

    def walk(feature: Feature) -> None:
        parent_selected = feature.name in selected
        for group in feature.groups:
            chosen = [m.name for m in group.members if m.name in selected]
            if parent_selected:
                if group.kind is GroupKind.MANDATORY and not chosen:
                    member = group.members[0]
                    violations.append(Violation(
                        kind=ViolationKind.MANDATORY_MISSING,
                        subject=member.name,
                        detail=(f"{member.name} is mandatory under "
                                f"{feature.name} but not selected")))
                elif group.kind is GroupKind.XOR and len(chosen) != 1:
                    names = ", ".join(m.name for m in group.members)
                    violations.append(Violation(
                        kind=ViolationKind.XOR_VIOLATION,
                        subject=feature.name,
                        detail=(f"xor group under {feature.name} requires "
                                f"exactly one of {{{names}}}, "
                                f"got {len(chosen)}")))
                elif group.kind is GroupKind.OR and not chosen:
                    names = ", ".join(m.name for m in group.members)
                    violations.append(Violation(
                        kind=ViolationKind.OR_VIOLATION,
                        subject=feature.name,
                        detail=(f"or group under {feature.name} requires "
                                f"at least one of {{{names}}}")))
            else:
                for name in chosen:
                    violations.append(Violation(
                        kind=ViolationKind.DANGLING_CHILD,
                        subject=name,
                        detail=(f"{name} is selected while its parent "
                                f"{feature.name} is not")))
            for member in group.members:
                walk(member)

    walk(model.root)

    for constraint in model.constraints:
        if not eval_formula(constraint.formula, config):
            violations.append(Violation(
                kind=ViolationKind.CONSTRAINT_FAILED,
                subject=constraint.name,
                detail=(f"constraint {constraint.name} is not satisfied: "
                        f"{format_formula(constraint.formula)}")))

    return ValidationReport(violations=tuple(violations))


# ---------------------------------------------------------------------------
# enumeration (bitmask route)
# ---------------------------------------------------------------------------

def _mask_expr(formula: Formula, index: dict[str, int]) -> str:
    if isinstance(formula, Atom):
        return f"(m >> {index[formula.name]} & 1)"
    if isinstance(formula, Not):
        return f"(not {_mask_expr(formula.operand, index)})"
    if isinstance(formula, And):
        return (f"({_mask_expr(formula.lhs, index)}"
                f" and {_mask_expr(formula.rhs, index)})")
    if isinstance(formula, Or):
        return (f"({_mask_expr(formula.lhs, index)}"
                f" or {_mask_expr(formula.rhs, index)})")
    if isinstance(formula, Implies):
        return (f"(not {_mask_expr(formula.lhs, index)}"
                f" or {_mask_expr(formula.rhs, index)})")
    if isinstance(formula, Iff):
        return (f"({_mask_expr(formula.lhs, index)}"
                f" == {_mask_expr(formula.rhs, index)})")
    raise TypeError(f"not a formula node: {formula!r}")


def _compile_predicate(model: FeatureModel, names: tuple[str, ...]):
    """Compile the model into one ``lambda m: ...`` over selection masks.

    Bit i of the mask selects the i-th feature in pre-order.
    """
    index = {name: i for i, name in enumerate(names)}
    parts: list[str] = [f"(m >> {index[model.root.name]} & 1)"]

    def walk(feature: Feature) -> None:
        pi = index[feature.name]
        for group in feature.groups:
            group_mask = 0
            for member in group.members:
                group_mask |= 1 << index[member.name]
            if group.kind is GroupKind.MANDATORY:
                ci = index[group.members[0].name]
                parts.append(f"((m >> {pi} & 1) == (m >> {ci} & 1))")
            elif group.kind is GroupKind.OPTIONAL:
                ci = index[group.members[0].name]
                parts.append(f"((m >> {ci} & 1) <= (m >> {pi} & 1))")
            elif group.kind is GroupKind.XOR:
                parts.append(
                    f"((m & {group_mask}).bit_count() == 1"
                    f" if m >> {pi} & 1 else not m & {group_mask})")
            else:
                parts.append(
                    f"((m & {group_mask}) != 0"
                    f" if m >> {pi} & 1 else not m & {group_mask})")
            for member in group.members:
                walk(member)

    walk(model.root)
    for constraint in model.constraints:
        parts.append(_mask_expr(constraint.formula, index))

    source = "lambda m: " + " and ".join(f"({p})" for p in parts)
    return eval(compile(source, "<feature-model>", "eval"),
                {"__builtins__": {}})


def enumerate_configurations(
        model: FeatureModel,
        limit: Optional[int] = None) -> list[Configuration]:
    """All valid configurations, cheapest selection mask first.

    The order is ascending by integer mask value where pre-order feature
    i contributes bit ``2**i``; it is total and reproducible.  Models
    with more than ``MAX_ENUMERABLE_FEATURES`` features are refused.
    ``limit`` truncates the scan after that many hits.
    """
    names = feature_names(model)
    if len(names) > MAX_ENUMERABLE_FEATURES:
        raise ModelTooLargeError(
            f"cannot enumerate {len(names)} features "
            f"(limit {MAX_ENUMERABLE_FEATURES}); "
            f"use validate_configuration for spot checks")
    if limit is not None and limit <= 0:
        return []
    predicate = _compile_predicate(model, names)
    results: list[Configuration] = []
    for mask in range(1 << len(names)):
        if predicate(mask):
            results.append(Configuration(
                names[i] for i in range(len(names)) if mask >> i & 1))
            if limit is not None and len(results) >= limit:
                break
    return results

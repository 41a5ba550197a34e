"""Canonical formatter for feature models and formulas.

``parse_model(format_model(m))`` reconstructs ``m`` exactly, and
formatting is idempotent: formatting an already-formatted model changes
nothing.  Formulas are printed with the fewest parentheses that preserve
structure under the grammar's precedence and associativity rules.
"""

from __future__ import annotations

from modelsel.feature_model.types import (
    And,
    Atom,
    ChildGroup,
    Feature,
    FeatureModel,
    Formula,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
)

_INDENT = "    "

# binding strength, loosest first
_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6}
_RIGHT_ASSOC = (Implies, Iff)
_OP_TEXT = {And: "&", Or: "|", Implies: "=>", Iff: "<=>"}


def _level(formula: Formula) -> int:
    return _LEVEL[type(formula)]


def format_formula(formula: Formula) -> str:
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        inner = format_formula(formula.operand)
        if _level(formula.operand) < _LEVEL[Not]:
            inner = f"({inner})"
        return f"!{inner}"
    level = _level(formula)
    lhs = format_formula(formula.lhs)
    rhs = format_formula(formula.rhs)
    if isinstance(formula, _RIGHT_ASSOC):
        if _level(formula.lhs) <= level:
            lhs = f"({lhs})"
        if _level(formula.rhs) < level:
            rhs = f"({rhs})"
    else:
        if _level(formula.lhs) < level:
            lhs = f"({lhs})"
        if _level(formula.rhs) <= level:
            rhs = f"({rhs})"
    return f"{lhs} {_OP_TEXT[type(formula)]} {rhs}"


def _format_feature(feature: Feature, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    if not feature.groups:
        lines.append(f"{pad}{feature.name}")
        return
    lines.append(f"{pad}{feature.name} {{")
    for group in feature.groups:
        _format_group(group, depth + 1, lines)
    lines.append(f"{pad}}}")


def _format_group(group: ChildGroup, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    if group.kind in (GroupKind.MANDATORY, GroupKind.OPTIONAL):
        member = group.members[0]
        if not member.groups:
            lines.append(f"{pad}{group.kind.value} {member.name}")
        else:
            lines.append(f"{pad}{group.kind.value} {member.name} {{")
            for sub in member.groups:
                _format_group(sub, depth + 1, lines)
            lines.append(f"{pad}}}")
    else:
        lines.append(f"{pad}{group.kind.value} {{")
        for member in group.members:
            _format_feature(member, depth + 1, lines)
        lines.append(f"{pad}}}")


def format_model(model: FeatureModel) -> str:
    lines: list[str] = []
    root = model.root
    if not root.groups:
        lines.append(f"features {root.name}")
    else:
        lines.append(f"features {root.name} {{")
        for group in root.groups:
            _format_group(group, 1, lines)
        lines.append("}")
    if model.constraints:
        lines.append("")
        for constraint in model.constraints:
            lines.append(
                f"constraint {constraint.name}: "
                f"{format_formula(constraint.formula)}")
    return "\n".join(lines) + "\n"

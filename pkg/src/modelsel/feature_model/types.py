"""AST node types for the feature-model DSL.

All nodes are frozen dataclasses so they hash, compare structurally, and
can be used as dict keys or set members.  ``FeatureModel`` checks its own
structural invariants on construction, so a model built directly in code
is held to the same rules as one produced by the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Union

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class FeatureModelError(ValueError):
    """Base class for every error raised by this subpackage."""


class ParseError(FeatureModelError):
    """Source text does not conform to the DSL grammar."""

    def __init__(self, message: str, line: int, column: int,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        suffix = ""
        if expected:
            suffix = " (expected " + " or ".join(expected) + ")"
        super().__init__(f"{line}:{column}: {message}{suffix}")


class DuplicateNameError(FeatureModelError):
    """A feature or constraint name is declared more than once."""


class UnknownAtomError(FeatureModelError):
    """A constraint formula references an undeclared feature."""


class ModelTooLargeError(FeatureModelError):
    """The model has too many features for exhaustive enumeration."""


# ---------------------------------------------------------------------------
# formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    """Reference to a feature by name; true iff the feature is selected."""

    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Iff]


def formula_atoms(formula: Formula) -> Iterator[str]:
    """Yield the atom names of ``formula`` left to right (with repeats)."""
    if isinstance(formula, Atom):
        yield formula.name
    elif isinstance(formula, Not):
        yield from formula_atoms(formula.operand)
    elif isinstance(formula, (And, Or, Implies, Iff)):
        yield from formula_atoms(formula.lhs)
        yield from formula_atoms(formula.rhs)
    else:
        raise TypeError(f"not a formula node: {formula!r}")


# ---------------------------------------------------------------------------
# feature tree
# ---------------------------------------------------------------------------

class GroupKind(Enum):
    MANDATORY = "mandatory"
    OPTIONAL = "optional"
    XOR = "xor"
    OR = "or"


@dataclass(frozen=True)
class Feature:
    """A named node in the feature tree.

    ``groups`` holds the child groups in declaration order; a leaf has
    none.  The same feature may own several groups of different kinds.
    """

    name: str
    groups: tuple["ChildGroup", ...] = ()


@dataclass(frozen=True)
class ChildGroup:
    """A typed block of child features under one parent.

    MANDATORY and OPTIONAL groups carry exactly one member; XOR and OR
    groups carry at least two.
    """

    kind: GroupKind
    members: tuple[Feature, ...]


@dataclass(frozen=True)
class Constraint:
    """A named cross-tree rule every valid configuration must satisfy."""

    name: str
    formula: Formula


@dataclass(frozen=True)
class FeatureModel:
    root: Feature
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        declared = _check_tree(self.root)
        seen_constraints: set[str] = set()
        for constraint in self.constraints:
            _check_name(constraint.name, "constraint")
            if constraint.name in seen_constraints:
                raise DuplicateNameError(
                    f"duplicate constraint name: {constraint.name}")
            seen_constraints.add(constraint.name)
            for atom in formula_atoms(constraint.formula):
                if atom not in declared:
                    raise UnknownAtomError(
                        f"constraint {constraint.name} references "
                        f"undeclared feature {atom}")


def _check_name(name: str, what: str) -> None:
    if not IDENT_RE.match(name):
        raise FeatureModelError(f"invalid {what} name: {name!r}")


def _check_tree(root: Feature) -> set[str]:
    """Walk the tree, enforce arity and name rules, return declared names."""
    declared: set[str] = set()
    stack = [root]
    while stack:
        feature = stack.pop()
        _check_name(feature.name, "feature")
        if feature.name in declared:
            raise DuplicateNameError(f"duplicate feature name: {feature.name}")
        declared.add(feature.name)
        for group in feature.groups:
            if group.kind in (GroupKind.MANDATORY, GroupKind.OPTIONAL):
                if len(group.members) != 1:
                    raise FeatureModelError(
                        f"{group.kind.value} group under {feature.name} must "
                        f"have exactly one member, got {len(group.members)}")
            else:
                if len(group.members) < 2:
                    raise FeatureModelError(
                        f"{group.kind.value} group under {feature.name} must "
                        f"have at least two members, got {len(group.members)}")
            stack.extend(group.members)
    return declared


# ---------------------------------------------------------------------------
# configurations and validation reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    """A set of selected feature names."""

    selected: frozenset[str]

    def __init__(self, selected: Iterable[str] = ()):
        object.__setattr__(self, "selected", frozenset(selected))

    def __contains__(self, name: str) -> bool:
        return name in self.selected

    def __iter__(self) -> Iterator[str]:
        return iter(self.selected)

    def __len__(self) -> int:
        return len(self.selected)


class ViolationKind(Enum):
    UNKNOWN_FEATURE = "unknown_feature"
    ROOT_MISSING = "root_missing"
    MANDATORY_MISSING = "mandatory_missing"
    XOR_VIOLATION = "xor_violation"
    OR_VIOLATION = "or_violation"
    DANGLING_CHILD = "dangling_child"
    CONSTRAINT_FAILED = "constraint_failed"


@dataclass(frozen=True)
class Violation:
    """One broken rule: what kind, which name, and a readable account."""

    kind: ViolationKind
    subject: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

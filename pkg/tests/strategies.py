"""Shared hypothesis strategies for feature-model tests."""

from __future__ import annotations

from hypothesis import strategies as st

from modelsel.feature_model import (
    And,
    Atom,
    ChildGroup,
    Constraint,
    Feature,
    FeatureModel,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
)


def formulas(names: list[str], max_leaves: int = 8) -> st.SearchStrategy:
    """Random propositional formulas over the given atom names."""
    atoms = st.sampled_from(names).map(Atom)
    return st.recursive(
        atoms,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda t: And(*t)),
            st.tuples(sub, sub).map(lambda t: Or(*t)),
            st.tuples(sub, sub).map(lambda t: Implies(*t)),
            st.tuples(sub, sub).map(lambda t: Iff(*t)),
        ),
        max_leaves=max_leaves,
    )


@st.composite
def feature_models(draw, max_features: int = 8,
                   max_constraints: int = 3) -> FeatureModel:
    """Random well-formed feature models.

    The tree shape comes from a parent-assignment vector (feature i hangs
    under some feature j < i), and each parent's children are chunked
    into groups: runs of two or more may become xor/or groups, single
    children become mandatory/optional.
    """
    n = draw(st.integers(min_value=1, max_value=max_features))
    names = [f"F{i}" for i in range(n)]
    parent = [0] * n
    for i in range(1, n):
        parent[i] = draw(st.integers(min_value=0, max_value=i - 1))
    children: dict[int, list[int]] = {i: [] for i in range(n)}
    for i in range(1, n):
        children[parent[i]].append(i)

    def build(i: int) -> Feature:
        kids = children[i]
        groups: list[ChildGroup] = []
        j = 0
        while j < len(kids):
            remaining = len(kids) - j
            if remaining >= 2 and draw(st.booleans()):
                size = draw(st.integers(min_value=2, max_value=remaining))
                kind = draw(st.sampled_from([GroupKind.XOR, GroupKind.OR]))
                members = tuple(build(k) for k in kids[j:j + size])
                groups.append(ChildGroup(kind=kind, members=members))
                j += size
            else:
                kind = draw(st.sampled_from(
                    [GroupKind.MANDATORY, GroupKind.OPTIONAL]))
                groups.append(ChildGroup(
                    kind=kind, members=(build(kids[j]),)))
                j += 1
        return Feature(name=names[i], groups=tuple(groups))

    root = build(0)
    k = draw(st.integers(min_value=0, max_value=max_constraints))
    constraints = tuple(
        Constraint(name=f"c{idx}", formula=draw(formulas(names)))
        for idx in range(k))
    return FeatureModel(root=root, constraints=constraints)


@st.composite
def configurations(draw, names: list[str]) -> frozenset:
    """Random subsets of the given feature names."""
    return frozenset(
        name for name in names if draw(st.booleans()))

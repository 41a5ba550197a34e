"""Lexer and recursive-descent parser for the feature-model DSL.

Grammar::

    model          := "features" feature constraintDecl*
    feature        := IDENT [ "{" item* "}" ]
    item           := "mandatory" feature
                    | "optional" feature
                    | "xor" "{" feature feature+ "}"
                    | "or"  "{" feature feature+ "}"
    constraintDecl := "constraint" IDENT ":" expr
    expr           := iff
    iff            := implies [ "<=>" iff ]          # right-assoc
    implies        := disj [ "=>" implies ]          # right-assoc
    disj           := conj ( "|" conj )*             # left-assoc
    conj           := unary ( "&" unary )*           # left-assoc
    unary          := "!" unary | "(" expr ")" | IDENT

``#`` starts a comment that runs to end of line.  Keywords (features,
mandatory, optional, xor, or, constraint) are reserved and cannot be
used as feature or constraint names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from modelsel.feature_model.types import (
    And,
    Atom,
    ChildGroup,
    Constraint,
    DuplicateNameError,
    Feature,
    FeatureModel,
    Formula,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    UnknownAtomError,
)

KEYWORDS = frozenset(
    {"features", "mandatory", "optional", "xor", "or", "constraint"})

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r\n]+)
    | (?P<comment>\#[^\n]*)
    | (?P<iff><=>)
    | (?P<implies>=>)
    | (?P<word>[A-Za-z][A-Za-z0-9_]*)
    | (?P<lbrace>\{)
    | (?P<rbrace>\})
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<colon>:)
    | (?P<not>!)
    | (?P<and>&)
    | (?P<or>\|)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str          # IDENT, KEYWORD, IFF, IMPLIES, LBRACE, ... , EOF
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {source[pos]!r}",
                line, pos - line_start + 1)
        group = match.lastgroup
        text = match.group()
        if group == "ws":
            for i, ch in enumerate(text):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        elif group != "comment":
            column = pos - line_start + 1
            if group == "word":
                kind = "KEYWORD" if text in KEYWORDS else "IDENT"
            else:
                kind = group.upper()
            tokens.append(Token(kind, text, line, column))
        pos = match.end()
    tokens.append(Token("EOF", "", line, len(source) - line_start + 1))
    return tokens


_TOKEN_LABELS = {
    "IDENT": "an identifier",
    "LBRACE": "'{'",
    "RBRACE": "'}'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "COLON": "':'",
    "NOT": "'!'",
    "AND": "'&'",
    "OR": "'|'",
    "IMPLIES": "'=>'",
    "IFF": "'<=>'",
    "EOF": "end of input",
}


def _describe(token: Token) -> str:
    if token.kind == "EOF":
        return "end of input"
    return repr(token.text)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    # -- token plumbing ----------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def at_keyword(self, word: str) -> bool:
        return self.current.kind == "KEYWORD" and self.current.text == word

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self.fail((_TOKEN_LABELS[kind],))
        return self.advance()

    def expect_keyword(self, word: str) -> Token:
        if not self.at_keyword(word):
            self.fail((f"'{word}'",))
        return self.advance()

    def fail(self, expected: tuple[str, ...]) -> None:
        token = self.current
        raise ParseError(
            f"unexpected {_describe(token)}",
            token.line, token.column, expected)

    # -- grammar -----------------------------------------------------------

    def parse_model(self) -> FeatureModel:
        self.expect_keyword("features")
        seen: dict[str, Token] = {}
        root = self.parse_feature(seen)
        constraints: list[Constraint] = []
        constraint_names: set[str] = set()
        while self.at_keyword("constraint"):
            constraints.append(
                self.parse_constraint(seen, constraint_names))
        if self.current.kind != "EOF":
            self.fail(("'constraint'", "end of input"))
        return FeatureModel(root=root, constraints=tuple(constraints))

    def parse_feature(self, seen: dict[str, Token]) -> Feature:
        name = self.expect("IDENT")
        if name.text in seen:
            first = seen[name.text]
            raise DuplicateNameError(
                f"{name.line}:{name.column}: duplicate feature name "
                f"{name.text} (first declared at "
                f"{first.line}:{first.column})")
        seen[name.text] = name
        groups: list[ChildGroup] = []
        if self.current.kind == "LBRACE":
            self.advance()
            while self.current.kind != "RBRACE":
                groups.append(self.parse_item(seen))
            self.expect("RBRACE")
        return Feature(name=name.text, groups=tuple(groups))

    def parse_item(self, seen: dict[str, Token]) -> ChildGroup:
        if self.at_keyword("mandatory") or self.at_keyword("optional"):
            kind = GroupKind(self.advance().text)
            return ChildGroup(kind=kind, members=(self.parse_feature(seen),))
        if self.at_keyword("xor") or self.at_keyword("or"):
            kind = GroupKind(self.advance().text)
            self.expect("LBRACE")
            members = [self.parse_feature(seen)]
            while self.current.kind != "RBRACE":
                members.append(self.parse_feature(seen))
            close = self.expect("RBRACE")
            if len(members) < 2:
                raise ParseError(
                    f"{kind.value} group needs at least two members, "
                    f"got {len(members)}",
                    close.line, close.column)
            return ChildGroup(kind=kind, members=tuple(members))
        self.fail(("'mandatory'", "'optional'", "'xor'", "'or'"))
        raise AssertionError("unreachable")

    def parse_constraint(self, seen: dict[str, Token],
                         constraint_names: set[str]) -> Constraint:
        self.expect_keyword("constraint")
        name = self.expect("IDENT")
        if name.text in constraint_names:
            raise DuplicateNameError(
                f"{name.line}:{name.column}: duplicate constraint name "
                f"{name.text}")
        constraint_names.add(name.text)
        self.expect("COLON")
        formula = self.parse_expr(seen)
        return Constraint(name=name.text, formula=formula)

    def parse_expr(self, seen: dict[str, Token]) -> Formula:
        return self.parse_iff(seen)

    def parse_iff(self, seen: dict[str, Token]) -> Formula:
        lhs = self.parse_implies(seen)
        if self.current.kind == "IFF":
            self.advance()
            return Iff(lhs=lhs, rhs=self.parse_iff(seen))
        return lhs

    def parse_implies(self, seen: dict[str, Token]) -> Formula:
        lhs = self.parse_disj(seen)
        if self.current.kind == "IMPLIES":
            self.advance()
            return Implies(lhs=lhs, rhs=self.parse_implies(seen))
        return lhs

    def parse_disj(self, seen: dict[str, Token]) -> Formula:
        formula = self.parse_conj(seen)
        while self.current.kind == "OR":
            self.advance()
            formula = Or(lhs=formula, rhs=self.parse_conj(seen))
        return formula

    def parse_conj(self, seen: dict[str, Token]) -> Formula:
        formula = self.parse_unary(seen)
        while self.current.kind == "AND":
            self.advance()
            formula = And(lhs=formula, rhs=self.parse_unary(seen))
        return formula

    def parse_unary(self, seen: dict[str, Token]) -> Formula:
        if self.current.kind == "NOT":
            self.advance()
            return Not(operand=self.parse_unary(seen))
        if self.current.kind == "LPAREN":
            self.advance()
            formula = self.parse_expr(seen)
            self.expect("RPAREN")
            return formula
        if self.current.kind == "IDENT":
            token = self.advance()
            if token.text not in seen:
                raise UnknownAtomError(
                    f"{token.line}:{token.column}: constraint references "
                    f"undeclared feature {token.text}")
            return Atom(name=token.text)
        self.fail(("'!'", "'('", "an identifier"))
        raise AssertionError("unreachable")


def parse_model(source: str) -> FeatureModel:
    """Parse DSL source text into a ``FeatureModel``.

    Raises ``ParseError`` on malformed syntax (with line, column, and the
    expected tokens), ``DuplicateNameError`` on repeated feature or
    constraint names, and ``UnknownAtomError`` when a constraint mentions
    a feature the tree never declares.
    """
    return _Parser(tokenize(source)).parse_model()


def parse_formula(source: str, declared: set[str]) -> Formula:
    """Parse a single constraint expression against ``declared`` names."""
    parser = _Parser(tokenize(source))
    seen = {name: Token("IDENT", name, 0, 0) for name in declared}
    formula = parser.parse_expr(seen)
    if parser.current.kind != "EOF":
        parser.fail(("end of input",))
    return formula

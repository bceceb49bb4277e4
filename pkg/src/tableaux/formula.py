"""Propositional formulas: syntax tree, parser, and printer.

The connectives are negation, conjunction, disjunction, and implication.
Input accepts both ASCII (~ & | ->) and Unicode (¬ ∧ ∨ →) symbols;
output always uses the Unicode symbols.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Formula",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "FormulaError",
    "LexError",
    "ParseError",
    "parse",
    "format_formula",
    "atoms",
    "degree",
]

_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")


class FormulaError(ValueError):
    """Raised when formula text cannot be read; position is 1-based."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class LexError(FormulaError):
    def __init__(self, position: int, char: str):
        self.char = char
        super().__init__(
            f"unexpected character {char!r} at position {position}", position
        )


class ParseError(FormulaError):
    def __init__(self, position: int, expected: str, found: str):
        self.expected = expected
        self.found = found
        super().__init__(
            f"expected {expected} at position {position}, found {found}", position
        )


class Formula:
    """Base class for formula nodes; equality and hashing are structural."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(
                f"invalid atom name {self.name!r}: expected a lowercase letter "
                "followed by lowercase letters, digits, or underscores"
            )


@dataclass(frozen=True, slots=True)
class Not(Formula):
    inner: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


# Precedence levels, tightest last.  Conjunction binds tighter than
# disjunction, which binds tighter than implication.
_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Atom: 5}

# Left operand of a left-associative connective keeps the connective's own
# precedence; the right operand must bind strictly tighter.  Implication
# associates to the right, so the roles flip.
_LEFT_MIN = {And: 3, Or: 2, Implies: 2}
_RIGHT_MIN = {And: 4, Or: 3, Implies: 1}

_SYMBOL = {And: " ∧ ", Or: " ∨ ", Implies: " → "}


def format_formula(f: Formula, full_parens: bool = False) -> str:
    """Render a formula; by default only necessary parentheses appear."""
    if full_parens:
        return _format_full(f)
    return _format_min(f, 0)


def _format_min(f: Formula, min_prec: int) -> str:
    cls = type(f)
    if cls is Atom:
        return f.name
    if cls is Not:
        text = "¬" + _format_min(f.inner, _PREC[Not])
        return "(" + text + ")" if _PREC[Not] < min_prec else text
    text = (
        _format_min(f.left, _LEFT_MIN[cls])
        + _SYMBOL[cls]
        + _format_min(f.right, _RIGHT_MIN[cls])
    )
    return "(" + text + ")" if _PREC[cls] < min_prec else text


def _format_full(f: Formula) -> str:
    cls = type(f)
    if cls is Atom:
        return f.name
    if cls is Not:
        return "(¬" + _format_full(f.inner) + ")"
    return "(" + _format_full(f.left) + _SYMBOL[cls] + _format_full(f.right) + ")"


def atoms(f: Formula) -> list[str]:
    """All atom names in f, sorted, without duplicates."""
    seen: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        cls = type(g)
        if cls is Atom:
            seen.add(g.name)
        elif cls is Not:
            stack.append(g.inner)
        else:
            stack.append(g.left)
            stack.append(g.right)
    return sorted(seen)


def degree(f: Formula) -> int:
    """Number of connective occurrences in f."""
    count = 0
    stack = [f]
    while stack:
        g = stack.pop()
        cls = type(g)
        if cls is Atom:
            continue
        count += 1
        if cls is Not:
            stack.append(g.inner)
        else:
            stack.append(g.left)
            stack.append(g.right)
    return count


_SINGLE_TOKENS = {
    "~": "NOT",
    "¬": "NOT",
    "&": "AND",
    "∧": "AND",
    "|": "OR",
    "∨": "OR",
    "→": "IMPLIES",
    "(": "LPAREN",
    ")": "RPAREN",
}


def _lex(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        kind = _SINGLE_TOKENS.get(c)
        if kind is not None:
            tokens.append((kind, c, i + 1))
            i += 1
            continue
        if c == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(("IMPLIES", "->", i + 1))
                i += 2
                continue
            raise LexError(i + 1, c)
        m = _ATOM_RE.match(text, i)
        if m:
            tokens.append(("ATOM", m.group(), i + 1))
            i = m.end()
            continue
        raise LexError(i + 1, c)
    tokens.append(("END", "end of input", n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "IMPLIES":
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek()[0] == "OR":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "AND":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, text, pos = self.peek()
        if kind == "NOT":
            self.advance()
            return Not(self.unary())
        if kind == "ATOM":
            self.advance()
            return Atom(text)
        if kind == "LPAREN":
            self.advance()
            f = self.implication()
            kind, text, pos = self.peek()
            if kind != "RPAREN":
                raise ParseError(pos, "')'", _describe(kind, text))
            self.advance()
            return f
        raise ParseError(pos, "a formula", _describe(kind, text))


def _describe(kind: str, text: str) -> str:
    return text if kind == "END" else repr(text)


def parse(text: str) -> Formula:
    """Parse formula text; raises ParseError or LexError on bad input."""
    tokens = _lex(text)
    parser = _Parser(tokens)
    f = parser.implication()
    kind, text, pos = parser.peek()
    if kind != "END":
        raise ParseError(pos, "end of input", _describe(kind, text))
    return f

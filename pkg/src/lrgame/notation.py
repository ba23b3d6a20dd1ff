"""Text notation for positions.

Grammar:
    expr := atom ('+' atom)*
    atom := '*L' | '*R' | '*L_' NAT | '*R_' NAT | 'M' NAT | 'B' NAT
          | '{' expr (',' expr)* '}'

Whitespace between tokens is ignored. Numerals are capped at 2^31 - 1.
Errors carry the byte offset where parsing failed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .engine import Engine, Position
from .values import Family, NamedValue, recognize, to_position

MAX_NUMERAL = 2**31 - 1


class ParseError(ValueError):
    """Syntax or value error in position notation, with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class TerminalExpr:
    kind: str


@dataclass(frozen=True)
class NamedExpr:
    value: NamedValue


@dataclass(frozen=True)
class OptionsExpr:
    options: tuple["PositionExpr", ...]


@dataclass(frozen=True)
class SumExpr:
    terms: tuple["PositionExpr", ...]


PositionExpr = Union[TerminalExpr, NamedExpr, OptionsExpr, SumExpr]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: int = None) -> ParseError:
        at = self.pos if offset is None else offset
        # offsets are reported in bytes, which only matters for non-ASCII input
        return ParseError(message, len(self.text[:at].encode("utf-8")))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def numeral(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number", start)
        value = int(self.text[start : self.pos])
        if value > MAX_NUMERAL:
            raise self.error(f"numeral too large (maximum {MAX_NUMERAL})", start)
        return value

    def expr(self) -> PositionExpr:
        terms = [self.atom()]
        while True:
            self.skip_ws()
            if self.peek() != "+":
                break
            self.pos += 1
            terms.append(self.atom())
        if len(terms) == 1:
            return terms[0]
        return SumExpr(tuple(terms))

    def atom(self) -> PositionExpr:
        self.skip_ws()
        ch = self.peek()
        if ch == "*":
            return self.star()
        if ch in ("M", "B"):
            return self.named(ch)
        if ch == "{":
            return self.options()
        if ch == "":
            raise self.error("unexpected end of input")
        raise self.error(f"expected a position atom, found {ch!r}")

    def star(self) -> PositionExpr:
        self.pos += 1
        kind = self.peek()
        if kind not in ("L", "R"):
            raise self.error("expected 'L' or 'R' after '*'")
        self.pos += 1
        if self.peek() != "_":
            return TerminalExpr(kind)
        self.pos += 1
        index = self.numeral()
        family = Family.STAR_L if kind == "L" else Family.STAR_R
        return NamedExpr(NamedValue(family, index))

    def named(self, letter: str) -> PositionExpr:
        self.pos += 1
        index_start = self.pos
        index = self.numeral()
        family = Family.MALTESE if letter == "M" else Family.BIG_STAR
        if index == 0:
            raise self.error(f"{letter} is undefined for index 0", index_start)
        return NamedExpr(NamedValue(family, index))

    def options(self) -> PositionExpr:
        open_offset = self.pos
        self.pos += 1
        self.skip_ws()
        if self.peek() == "}":
            raise self.error(
                "empty option set: positions require at least one option", open_offset
            )
        options = [self.expr()]
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == ",":
                self.pos += 1
                options.append(self.expr())
                continue
            if ch == "}":
                self.pos += 1
                return OptionsExpr(tuple(options))
            if ch == "":
                raise self.error("unclosed '{'", open_offset)
            raise self.error(f"expected ',' or '}}', found {ch!r}")


def parse(text: str) -> PositionExpr:
    parser = _Parser(text)
    try:
        tree = parser.expr()
    except RecursionError:
        raise ParseError("nesting too deep", parser.pos) from None
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error(f"unexpected trailing input {parser.peek()!r}")
    return tree


def evaluate(engine: Engine, expr: PositionExpr) -> Position:
    """Build the position an expression denotes (sums evaluated left to right)."""
    if isinstance(expr, TerminalExpr):
        return engine.make_terminal(expr.kind)
    if isinstance(expr, NamedExpr):
        return to_position(engine, expr.value)
    if isinstance(expr, OptionsExpr):
        return engine.make_position(evaluate(engine, o) for o in expr.options)
    if isinstance(expr, SumExpr):
        return engine.sum_all(evaluate(engine, t) for t in expr.terms)
    raise TypeError(f"not a position expression: {expr!r}")


def parse_position(engine: Engine, text: str) -> Position:
    return evaluate(engine, parse(text))


def format_position(engine: Engine, pos: Position, recognize_names: bool = False) -> str:
    """Brace notation for a position; with recognize_names, family literals print as names.

    Options are ordered by (birthday, plain canonical text) in both modes,
    so output is stable and reparses to the identical position.
    """
    engine.ensure_owned(pos)
    if not recognize_names:
        return engine.canonical_text(pos)
    memo = engine.cache("named_text")
    stack = [pos]
    while stack:
        node = stack[-1]
        if node.uid in memo:
            stack.pop()
            continue
        if node.is_terminal:
            memo[node.uid] = "*L" if node.kind == "L" else "*R"
            stack.pop()
            continue
        named = recognize(engine, node)
        if named is not None:
            memo[node.uid] = str(named)
            stack.pop()
            continue
        pending = [o for o in node.options if o.uid not in memo]
        if pending:
            stack.extend(pending)
            continue
        parts = sorted((o.birthday, engine.canonical_text(o), memo[o.uid]) for o in node.options)
        memo[node.uid] = "{" + ", ".join(text for _, _, text in parts) + "}"
        stack.pop()
    return memo[pos.uid]

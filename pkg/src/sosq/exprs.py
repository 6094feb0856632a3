"""Recursive-descent parser for one-variable bound expressions.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom
    atom   := NUMBER | 'x' | '(' expr ')' | NAME '(' expr (',' expr)* ')'
    NAME   := 'abs' | 'min' | 'max' | 'pow'

parse_bound_expression compiles the source into a plain float -> float
callable; nothing is ever eval()'d.
"""

from __future__ import annotations

import re
from collections.abc import Callable

__all__ = ["ExpressionError", "parse_bound_expression"]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/(),]))"
)

_FUNCTIONS: dict[str, tuple[int, int | None]] = {
    # name: (min arity, max arity or None for unbounded)
    "abs": (1, 1),
    "pow": (2, 2),
    "min": (2, None),
    "max": (2, None),
}


class ExpressionError(ValueError):
    """Malformed bound expression; remembers the offending token."""

    def __init__(self, message: str, token: str, position: int) -> None:
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            stray = src[pos:].lstrip()
            if not stray:
                break
            at = len(src) - len(stray)
            raise ExpressionError("unexpected character", stray[0], at)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "<end>", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str) -> None:
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text, at = self.peek()
        if kind != "op" or text != op:
            raise ExpressionError(f"expected {op!r}", text, at)
        self.advance()

    def parse(self) -> Callable[[float], float]:
        kind, text, at = self.peek()
        if kind == "end":
            raise ExpressionError("empty expression", text, at)
        fn = self.expr()
        kind, text, at = self.peek()
        if kind != "end":
            raise ExpressionError("trailing input", text, at)
        return fn

    def expr(self) -> Callable[[float], float]:
        left = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                right = self.term()
                if text == "+":
                    left = (lambda a, b: lambda x: a(x) + b(x))(left, right)
                else:
                    left = (lambda a, b: lambda x: a(x) - b(x))(left, right)
            else:
                return left

    def term(self) -> Callable[[float], float]:
        left = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                right = self.factor()
                if text == "*":
                    left = (lambda a, b: lambda x: a(x) * b(x))(left, right)
                else:
                    left = (lambda a, b: lambda x: a(x) / b(x))(left, right)
            else:
                return left

    def factor(self) -> Callable[[float], float]:
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            inner = self.factor()
            return lambda x: -inner(x)
        return self.atom()

    def atom(self) -> Callable[[float], float]:
        kind, text, at = self.advance()
        if kind == "num":
            value = float(text)
            return lambda x: value
        if kind == "name":
            if text == "x":
                return lambda x: x
            if text in _FUNCTIONS:
                return self.call(text, at)
            raise ExpressionError("unknown name", text, at)
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExpressionError("expected a value", text, at)

    def call(self, name: str, at: int) -> Callable[[float], float]:
        lo, hi = _FUNCTIONS[name]
        self.expect_op("(")
        args = [self.expr()]
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == ",":
                self.advance()
                args.append(self.expr())
            else:
                break
        self.expect_op(")")
        if len(args) < lo or (hi is not None and len(args) > hi):
            wants = str(lo) if hi == lo else f"at least {lo}"
            raise ExpressionError(
                f"{name} expects {wants} argument(s), got {len(args)}", name, at
            )
        if name == "abs":
            a = args[0]
            return lambda x: abs(a(x))
        if name == "pow":
            a, b = args
            return lambda x: a(x) ** b(x)
        if name == "min":
            return lambda x: min(a(x) for a in args)
        return lambda x: max(a(x) for a in args)


def parse_bound_expression(src: str) -> Callable[[float], float]:
    """Compile a bound expression into a float -> float callable."""
    return _Parser(src).parse()

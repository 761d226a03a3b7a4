"""A small recursive-descent parser for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Values are built through a caller-supplied ``atom`` callback and an
``embed`` constructor for integer literals, so the same grammar serves both
coefficient expressions (``v``, ``s``) and skein elements (``h3``, ``hs2``).
"""

from __future__ import annotations

import re
from typing import Callable, TypeVar

T = TypeVar("T")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}")
            out.append(("op", op))
        pos = m.end()
    return out


def parse_expression(text: str, atom: Callable[[str], T], embed: Callable[[int], T]) -> T:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    pos = 0

    def peek() -> tuple[str, str] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> tuple[str, str]:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of expression")
        tok = tokens[pos]
        if expected is not None and tok != ("op", expected):
            raise ParseError(f"expected {expected!r}, got {tok[1]!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = primary()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            kind, val = take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            return base ** (sign * int(val))
        return base

    def primary():
        kind, val = take()
        if kind == "int":
            return embed(int(val))
        if kind == "name":
            return atom(val)
        if val == "(":
            inner = expr()
            take(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input at {tokens[pos][1]!r}")
    return result

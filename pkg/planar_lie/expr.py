"""
Parser and printer for the vector-field expression language.

Grammar::

    expression := ['+' | '-'] term (('+' | '-') term)*
    term       := factor ('*' factor)*
    factor     := atom ['^' NUMBER]
    atom       := NUMBER ['/' NUMBER] | 'i' | 'x' | 'y' | 'Dx' | 'Dy'
                | 'exp' '(' expression ')' | '(' expression ')'

Every summand must carry exactly one of ``Dx`` / ``Dy`` once the expression is
expanded; ``exp`` arguments must be linear forms in ``x`` and ``y``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

from .coeffring import ExpPoly, GaussianRational, gq
from .exceptions import ExprSyntaxError, MixedBasis, RingViolation
from .fields import VectorField, format_field
from .utils.constants import (
    MAX_DEGREE,
    MAX_EXPONENT,
    MAX_NESTING,
    MAX_NUMBER_DIGITS,
    MAX_TERMS,
)

_IDENTIFIERS = ("x", "y", "i", "Dx", "Dy", "exp")
_OPERATORS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, NAME, OP, EOF
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1) -> Iterator[Token]:
    column = 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            column = 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            column += 1
            continue
        start = pos
        if ch.isascii() and ch.isdigit():
            while pos < len(text) and text[pos].isascii() and text[pos].isdigit():
                pos += 1
            if pos - start > MAX_NUMBER_DIGITS:
                raise ExprSyntaxError(
                    f"Number longer than {MAX_NUMBER_DIGITS} digits", line, column
                )
            yield Token("NUMBER", text[start:pos], line, column)
        elif ch.isascii() and ch.isalpha():
            while pos < len(text) and text[pos].isascii() and text[pos].isalpha():
                pos += 1
            word = text[start:pos]
            if word not in _IDENTIFIERS:
                raise ExprSyntaxError(f"Unknown identifier '{word}'", line, column)
            yield Token("NAME", word, line, column)
        elif ch in _OPERATORS:
            pos += 1
            yield Token("OP", ch, line, column)
        else:
            raise ExprSyntaxError(f"Unexpected character {ch!r}", line, column)
        column += pos - start
    yield Token("EOF", "", line, column)


# syntax tree


@dataclass(frozen=True)
class Number:
    value: GaussianRational
    token: Token


@dataclass(frozen=True)
class Symbol:
    name: str  # x, y, Dx, Dy
    token: Token


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, Node], ...]  # (sign, node)
    token: Token


@dataclass(frozen=True)
class Product:
    factors: tuple[Node, ...]
    token: Token


@dataclass(frozen=True)
class Power:
    base: Node
    exponent: int
    token: Token


@dataclass(frozen=True)
class Exp:
    argument: Node
    token: Token


Node = Union[Number, Symbol, Sum, Product, Power, Exp]


class Parser:
    """Recursive-descent parser over one logical line."""

    def __init__(self, text: str, line: int = 1):
        self.tokens = list(tokenize(text, line))
        self.index = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "EOF":
            self.index += 1
        return token

    def error(self, message: str, token: Token | None = None) -> ExprSyntaxError:
        token = token or self.current
        return ExprSyntaxError(message, token.line, token.column)

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind != "OP":
            found = self.current.text or "end of input"
            raise self.error(f"Expected '{text}', found '{found}'")
        return self.advance()

    def parse(self) -> Node:
        node = self.expression()
        if self.current.kind != "EOF":
            raise self.error(f"Unexpected '{self.current.text}'")
        return node

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise self.error(f"Nesting deeper than {MAX_NESTING}")

    def expression(self) -> Node:
        self._enter()
        start = self.current
        sign = 1
        if self.current.kind == "OP" and self.current.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
        terms = [(sign, self.term())]
        while self.current.kind == "OP" and self.current.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
            terms.append((sign, self.term()))
        self.depth -= 1
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms), start)

    def term(self) -> Node:
        start = self.current
        factors = [self.factor()]
        while self.current.kind == "OP" and self.current.text == "*":
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), start)

    def factor(self) -> Node:
        base = self.atom()
        if self.current.kind == "OP" and self.current.text == "^":
            caret = self.advance()
            token = self.advance()
            if token.kind != "NUMBER":
                raise self.error("Exponent must be a non-negative integer", token)
            exponent = int(token.text)
            if exponent > MAX_EXPONENT:
                raise self.error(f"Exponent exceeds {MAX_EXPONENT}", token)
            return Power(base, exponent, caret)
        return base

    def atom(self) -> Node:
        token = self.current
        if token.kind == "NUMBER":
            self.advance()
            numerator = int(token.text)
            if self.current.kind == "OP" and self.current.text == "/":
                self.advance()
                denominator_token = self.advance()
                if denominator_token.kind != "NUMBER":
                    raise self.error("Expected a denominator", denominator_token)
                denominator = int(denominator_token.text)
                if denominator == 0:
                    raise self.error("Zero denominator", denominator_token)
                return Number(gq(f"{numerator}/{denominator}"), token)
            return Number(gq(numerator), token)
        if token.kind == "NAME":
            self.advance()
            if token.text == "i":
                return Number(gq(0, 1), token)
            if token.text == "exp":
                self.expect("(")
                argument = self.expression()
                self.expect(")")
                return Exp(argument, token)
            return Symbol(token.text, token)
        if token.kind == "OP" and token.text == "(":
            self.advance()
            node = self.expression()
            self.expect(")")
            return node
        found = token.text or "end of input"
        raise self.error(f"Unexpected '{found}'")


# lowering: a linear combination over the basis {1, Dx, Dy}

Lowered = dict[str | None, ExpPoly]


def _scalar(value: ExpPoly) -> Lowered:
    return {None: value}


def _add(a: Lowered, b: Lowered, sign: int) -> Lowered:
    out = dict(a)
    for key, value in b.items():
        out[key] = out.get(key, ExpPoly.zero()) + (value if sign > 0 else -value)
    return out


def _multiply(a: Lowered, b: Lowered, token: Token) -> Lowered:
    out: Lowered = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if ka is not None and kb is not None:
                raise MixedBasis(
                    f"Summand multiplies {ka} by {kb}", token.line, token.column
                )
            key = ka if ka is not None else kb
            product = va * vb
            if product.max_total_degree() > MAX_DEGREE:
                raise ExprSyntaxError(
                    f"Degree exceeds {MAX_DEGREE}", token.line, token.column
                )
            out[key] = out.get(key, ExpPoly.zero()) + product
            if len(out[key].terms) > MAX_TERMS:
                raise ExprSyntaxError(
                    f"Expansion has more than {MAX_TERMS} terms", token.line, token.column
                )
    return out


def _linear_exponent(argument: Lowered, token: Token) -> ExpPoly:
    if any(value for key, value in argument.items() if key is not None):
        raise RingViolation("exp argument contains Dx or Dy", token.line, token.column)
    form = argument.get(None, ExpPoly.zero())
    xfreq = gq()
    yfreq = gq()
    for m, c in form.terms.items():
        if m.xfreq or m.yfreq or m.xdeg + m.ydeg != 1:
            raise RingViolation(
                f"exp argument '{form}' is not linear in x and y",
                token.line,
                token.column,
            )
        if m.xdeg:
            xfreq = c
        else:
            yfreq = c
    return ExpPoly.exp(xfreq, yfreq)


def lower(node: Node) -> Lowered:
    if isinstance(node, Number):
        return _scalar(ExpPoly.const(node.value))
    if isinstance(node, Symbol):
        if node.name in ("Dx", "Dy"):
            return {node.name: ExpPoly.const(1)}
        return _scalar(ExpPoly.x() if node.name == "x" else ExpPoly.y())
    if isinstance(node, Sum):
        out: Lowered = {}
        for sign, term in node.terms:
            out = _add(out, lower(term), sign)
        return out
    if isinstance(node, Product):
        out = _scalar(ExpPoly.const(1))
        for factor in node.factors:
            out = _multiply(out, lower(factor), node.token)
        return out
    if isinstance(node, Power):
        base = lower(node.base)
        result = _scalar(ExpPoly.const(1))
        for _ in range(node.exponent):
            result = _multiply(result, base, node.token)
        return result
    return _scalar(_linear_exponent(lower(node.argument), node.token))


def _decode(text: str | bytes) -> str:
    if isinstance(text, str):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as e:
        prefix = text[: e.start]
        line = prefix.count(b"\n") + 1
        column = e.start - (prefix.rfind(b"\n") + 1) + 1
        raise ExprSyntaxError("Input is not valid UTF-8", line, column) from None


def parse_exppoly(text: str | bytes, line: int = 1) -> ExpPoly:
    """Parse a coefficient expression (no Dx/Dy)."""
    parser = Parser(_decode(text), line)
    start = parser.current
    lowered = lower(parser.parse())
    if any(value for key, value in lowered.items() if key is not None):
        raise ExprSyntaxError(
            "Coefficient expression contains Dx or Dy", start.line, start.column
        )
    return lowered.get(None, ExpPoly.zero())


def parse_field(text: str | bytes, line: int = 1) -> VectorField:
    parser = Parser(_decode(text), line)
    start = parser.current
    lowered = lower(parser.parse())
    if lowered.get(None):
        raise ExprSyntaxError(
            "Summand without Dx or Dy", start.line, start.column
        )
    if not any(key is not None for key in lowered):
        raise ExprSyntaxError("Expression has no Dx or Dy", start.line, start.column)
    return VectorField(
        lowered.get("Dx", ExpPoly.zero()), lowered.get("Dy", ExpPoly.zero())
    )


def print_field(v: VectorField) -> str:
    return format_field(v)


def parse_algebra_file(text: str | bytes) -> list[VectorField]:
    """One field per non-empty line; ``#`` starts a comment."""
    fields: list[VectorField] = []
    for number, raw in enumerate(_decode(text).split("\n"), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            fields.append(parse_field(content, number))
    return fields

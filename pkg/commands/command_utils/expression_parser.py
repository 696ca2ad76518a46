"""
Parser for algebra expressions typed on the command line.

Grammar:
    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (factor | '*' factor | '/' factor)*
    factor := atom ['^' ['-'] nat]
    atom   := symbol | nat | '(' expr ')'

Juxtaposition is the (noncommutative) product and is evaluated left to right.
Symbols are the generators a, b, c, d (a run such as "abc" is the word a b c),
t, q (= t^2), sqrtD, mu, nu, chip and chim. Division and negative powers are
only allowed for scalars, so printed elements such as "1 + t^-2 b c" parse back.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Union

from scalars import Scalar, t_pow
from pbw_algebra import AlgebraElement

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")

GENERATOR_LETTERS = "abcd"
SCALAR_SYMBOLS = ("t", "q")
PARAMETER_SYMBOLS = ("sqrtD", "mu", "nu", "chip", "chim")


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExpressionDomainError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class Number:
    value: int
    position: int = 0


@dataclass(frozen=True)
class Symbol:
    name: str
    position: int = 0


@dataclass(frozen=True)
class Negate:
    operand: "Expression"
    position: int = 0


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Expression"
    right: "Expression"
    position: int = 0


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int
    position: int = 0


Expression = Union[Number, Symbol, Negate, BinaryOp, Power]


def tokenize(source: str) -> List[Token]:
    tokens = []
    position = 0
    source = source.rstrip()
    while position < len(source):
        match = _TOKEN.match(source, position)
        if not match or match.end() == position:
            offset = len(source) - len(source[position:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {source[offset]!r}", offset)
        kind = match.lastgroup
        text = match.group(kind)
        start = match.start(kind)
        if kind == "name" and text not in SCALAR_SYMBOLS + PARAMETER_SYMBOLS:
            if any(letter not in GENERATOR_LETTERS for letter in text):
                raise ExpressionSyntaxError(f"unknown symbol {text!r}", start)
            tokens.extend(Token("name", letter, start + shift) for shift, letter in enumerate(text))
        else:
            tokens.append(Token(kind, text, start))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            raise ExpressionSyntaxError("unexpected end of input", len(self.source))
        self.index += 1
        return token

    def at_op(self, *ops) -> bool:
        token = self.peek()
        return token is not None and token.kind == "op" and token.text in ops

    def expect_op(self, op: str) -> Token:
        token = self.advance()
        if token.kind != "op" or token.text != op:
            raise ExpressionSyntaxError(f"expected {op!r}, found {token.text!r}", token.position)
        return token

    def parse(self) -> Expression:
        if not self.tokens:
            raise ExpressionSyntaxError("empty expression", 0)
        expression = self.expr()
        token = self.peek()
        if token is not None:
            raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)
        return expression

    def expr(self) -> Expression:
        if self.at_op("+", "-"):
            sign = self.advance()
            term = self.term()
            node = Negate(term, sign.position) if sign.text == "-" else term
        else:
            node = self.term()
        while self.at_op("+", "-"):
            op = self.advance()
            node = BinaryOp(op.text, node, self.term(), op.position)
        return node

    def starts_factor(self) -> bool:
        token = self.peek()
        return token is not None and (token.kind in ("number", "name") or token.text == "(")

    def term(self) -> Expression:
        node = self.factor()
        while True:
            if self.at_op("*", "/"):
                op = self.advance()
                node = BinaryOp(op.text, node, self.factor(), op.position)
            elif self.starts_factor():
                token = self.peek()
                node = BinaryOp("*", node, self.factor(), token.position)
            else:
                return node

    def factor(self) -> Expression:
        node = self.atom()
        if self.at_op("^"):
            caret = self.advance()
            negative = False
            if self.at_op("-"):
                self.advance()
                negative = True
            token = self.advance()
            if token.kind != "number":
                raise ExpressionSyntaxError(f"expected an integer exponent, found {token.text!r}", token.position)
            exponent = int(token.text)
            node = Power(node, -exponent if negative else exponent, caret.position)
        return node

    def atom(self) -> Expression:
        token = self.advance()
        if token.kind == "number":
            return Number(int(token.text), token.position)
        if token.kind == "name":
            return Symbol(token.text, token.position)
        if token.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)


def parse_expression(source: str) -> Expression:
    """
    Parse an expression into its syntax tree.

    Raises:
        ExpressionSyntaxError: with the character position of the offending token
    """
    return _Parser(source).parse()


def _symbol_value(symbol: Symbol, params) -> AlgebraElement:
    name = symbol.name
    if name in GENERATOR_LETTERS:
        return AlgebraElement.generator(name)
    if name == "t":
        return AlgebraElement.scalar(t_pow(1))
    if name == "q":
        return AlgebraElement.scalar(t_pow(2))
    values = params.symbol_values() if params is not None else {}
    if name not in values:
        raise ExpressionDomainError(f"{name} needs parameters with a rational discriminant")
    return AlgebraElement.scalar(values[name])


def _scalar_of(value: AlgebraElement, what: str) -> Scalar:
    if not value.is_scalar():
        raise ExpressionDomainError(f"{what} must be a scalar, got {value}")
    return value.scalar_part()


def evaluate(node: Expression, params=None) -> AlgebraElement:
    """
    Evaluate a syntax tree to a normal-form element.

    Args:
        node: The parsed expression
        params: The parameters providing mu, nu, chip, chim and sqrtD (optional)

    Raises:
        ExpressionDomainError: for division by a non-scalar or by zero, negative powers
            of non-scalars, or parameter symbols without parameters
    """
    if isinstance(node, Number):
        return AlgebraElement.scalar(node.value)
    if isinstance(node, Symbol):
        return _symbol_value(node, params)
    if isinstance(node, Negate):
        return -evaluate(node.operand, params)
    if isinstance(node, Power):
        base = evaluate(node.base, params)
        if node.exponent >= 0:
            return base**node.exponent
        scalar = _scalar_of(base, f"the base of a negative power (position {node.position})")
        if not scalar:
            raise ExpressionDomainError(f"zero raised to a negative power at position {node.position}")
        return AlgebraElement.scalar(scalar.inverse() ** -node.exponent)
    left, right = evaluate(node.left, params), evaluate(node.right, params)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    divisor = _scalar_of(right, f"the divisor at position {node.position}")
    if not divisor:
        raise ExpressionDomainError(f"division by zero at position {node.position}")
    return left * divisor.inverse()


def parse_element(source: str, params=None) -> AlgebraElement:
    node = parse_expression(source)
    logger.debug(f"parsed {source!r} as {node}")
    return evaluate(node, params)

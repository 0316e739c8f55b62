"""Expressions over exact rationals: tokenizer, parser, printer and evaluator.

Grammar, loosest binding first::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NAT | NAT '/' NAT | name '(' sum ',' sum ')' | '(' sum ')'

`NAT/NAT` written without whitespace is a single rational literal, so
`1/2 / 3` divides one half by three. Offsets in errors and spans are byte
offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import enum
import re
import typing
from dataclasses import dataclass, field

from tree_arith.arith import cmp, divide, gcd, lcm, remainder
from tree_arith.errors import (
    DomainError,
    EvaluationError,
    ExponentError,
    ExpressionDepthError,
    ExpressionSyntaxError,
    NonIntegerArgumentError,
    TreeArithError,
)
from tree_arith.rationals import (
    PQ,
    Fraction,
    M,
    P,
    Q,
    Z,
    from_fraq,
    radd,
    rdivide,
    rmultiply,
    ropposite,
    rpower,
    rsub,
)
from tree_arith.terms import ONE, Ord3, T, Term

if typing.TYPE_CHECKING:
    from collections.abc import Callable


class Operator(enum.StrEnum):
    ADD = '+'
    SUB = '-'
    MUL = '*'
    DIV = '/'
    POW = '^'


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open byte range `[start, end)` of a node in the source text."""

    start: int
    end: int


_NO_SPAN = Span(0, 0)


@dataclass(frozen=True, slots=True)
class NatLit:
    value: int
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class RatLit:
    """A `n/d` literal, kept as written (not reduced)."""

    value: Fraction
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class Neg:
    operand: Expr
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class BinOp:
    op: Operator
    left: Expr
    right: Expr
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class Call:
    name: str
    args: tuple[Expr, ...]
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True, slots=True)
class Group:
    inner: Expr
    span: Span = field(default=_NO_SPAN, compare=False, kw_only=True)


Expr = NatLit | RatLit | Neg | BinOp | Call | Group

FUNCTIONS = ('gcd', 'lcm', 'div', 'mod', 'cmp')

_BINDING_POWER = {
    Operator.ADD: 10,
    Operator.SUB: 10,
    Operator.MUL: 20,
    Operator.DIV: 20,
    Operator.POW: 30,
}
_NEG_POWER = 25
_ATOM_POWER = 40

_OPERAND_START = frozenset({'number', 'fraction', 'name', '(', '-'})
_OPERATORS = frozenset(op.value for op in Operator)

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<fraction>[0-9]+/[0-9]+)
    | (?P<number>[0-9]+)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<punct>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    """Split text into tokens; the list always ends with an `end` token.

    Characters that start no token become a single `invalid` token so the
    parser can report them together with what it expected there.
    """
    tokens: list[Token] = []
    index = 0
    offset = 0
    while index < len(text):
        found = _TOKEN.match(text, index)
        if found is None:
            width = len(text[index].encode())
            tokens.append(Token('invalid', text[index], offset, offset + width))
            index += 1
            offset += width
            continue
        chunk = found.group()
        width = len(chunk.encode())
        kind = found.lastgroup or 'invalid'
        if kind == 'punct':
            kind = chunk
        if kind != 'space':
            tokens.append(Token(kind, chunk, offset, offset + width))
        index = found.end()
        offset += width
    tokens.append(Token('end', '', offset, offset))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, expected: typing.Iterable[str]) -> typing.NoReturn:
        raise ExpressionSyntaxError(text=self.text, offset=self.peek().start, expected=expected)

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            self.fail({kind})
        return self.advance()

    def expression(self, min_power: int, closers: frozenset[str]) -> Expr:
        left = self.operand(closers)
        while True:
            token = self.peek()
            if token.kind not in _OPERATORS:
                if token.kind not in closers:
                    self.fail(_OPERATORS | closers)
                return left
            op = Operator(token.kind)
            power = _BINDING_POWER[op]
            if power < min_power:
                return left
            self.advance()
            right_power = power if op is Operator.POW else power + 1
            right = self.expression(right_power, closers)
            left = BinOp(op, left, right, span=Span(left.span.start, right.span.end))

    def operand(self, closers: frozenset[str]) -> Expr:
        token = self.peek()
        match token.kind:
            case '-':
                self.advance()
                inner = self.expression(_NEG_POWER, closers)
                return Neg(inner, span=Span(token.start, inner.span.end))
            case 'number':
                self.advance()
                return NatLit(int(token.text), span=Span(token.start, token.end))
            case 'fraction':
                self.advance()
                num, den = token.text.split('/')
                return RatLit(Fraction(int(num), int(den)), span=Span(token.start, token.end))
            case '(':
                self.advance()
                inner = self.expression(0, frozenset({')'}))
                close = self.expect(')')
                return Group(inner, span=Span(token.start, close.end))
            case 'name':
                return self.call()
        self.fail(_OPERAND_START)

    def call(self) -> Call:
        name = self.peek()
        if name.text not in FUNCTIONS:
            self.fail(FUNCTIONS)
        self.advance()
        self.expect('(')
        first = self.expression(0, frozenset({','}))
        self.expect(',')
        second = self.expression(0, frozenset({')'}))
        close = self.expect(')')
        return Call(name.text, (first, second), span=Span(name.start, close.end))


def parse(text: str) -> Expr:
    """Parse an expression.

    Raises:
        ExpressionSyntaxError: with the byte offset of the offending token and
            the set of tokens that would have been accepted there.
        ExpressionDepthError: if the nesting is too deep to parse.
    """
    parser = _Parser(text)
    try:
        return parser.expression(0, frozenset({'end'}))
    except RecursionError as exc:
        raise ExpressionDepthError from exc


def _precedence(e: Expr) -> int:
    match e:
        case BinOp(op):
            return _BINDING_POWER[op]
        case Neg():
            return _NEG_POWER
    return _ATOM_POWER


def _format(e: Expr) -> str:
    match e:
        case NatLit(value):
            return str(value)
        case RatLit(value):
            return f'{value.numerator}/{value.denominator}'
        case Group(inner):
            return f'({_format(inner)})'
        case Call(name, args):
            return f'{name}({", ".join(_format(arg) for arg in args)})'
        case Neg(operand):
            return f'-{_wrap(operand, _precedence(operand) < _NEG_POWER)}'
        case BinOp(op, left, right):
            power = _BINDING_POWER[op]
            if op is Operator.POW:
                left_parens = _precedence(left) <= power
                right_parens = _precedence(right) < power and not isinstance(right, Neg)
            else:
                left_parens = _precedence(left) < power
                right_parens = _precedence(right) <= power
            return f'{_wrap(left, left_parens)} {op.value} {_wrap(right, right_parens)}'
    raise TypeError(e)


def _wrap(e: Expr, parens: bool) -> str:
    text = _format(e)
    return f'({text})' if parens else text


def format_expr(e: Expr) -> str:
    """Print an expression so that `parse` reads back an equal tree.

    Parentheses are added only where precedence requires them; `Group` nodes
    keep theirs. Parentheses the printer adds come back from `parse` as
    `Group` nodes, so the round trip is exact only up to `Group` wrappers.
    Printing a parsed tree and parsing it again gives the same tree.
    """
    try:
        return _format(e)
    except RecursionError as exc:
        raise ExpressionDepthError from exc


@dataclass(frozen=True, slots=True)
class EvalResult:
    """Either a value or the error that stopped evaluation."""

    value: Q | None = None
    error: TreeArithError | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


_ARITHMETIC: dict[Operator, tuple[str, Callable[[Q, Q], Q]]] = {
    Operator.ADD: ('radd', radd),
    Operator.SUB: ('rsub', rsub),
    Operator.MUL: ('rmultiply', rmultiply),
    Operator.DIV: ('rdivide', rdivide),
}

_INTEGER_FUNCTIONS: dict[str, Callable[[Term, Term], Term]] = {
    'gcd': gcd,
    'lcm': lcm,
    'div': divide,
    'mod': remainder,
}


def _natural(q: Q) -> Term | None:
    match q:
        case Z():
            return T
        case P(PQ(numerator, denominator)) if denominator == ONE:
            return numerator
    return None


def _from_natural(n: Term) -> Q:
    return Z() if n is T else P(PQ(n, ONE))


def _power(base: Q, exponent: Q) -> Q:
    n = _natural(exponent)
    if n is None:
        raise ExponentError
    return rpower(base, n)


def _call(name: str, a: Q, b: Q) -> Q:
    x, y = _natural(a), _natural(b)
    if x is None or y is None:
        raise NonIntegerArgumentError(name)
    if name == 'cmp':
        return {Ord3.LT: M(PQ(ONE, ONE)), Ord3.EQ: Z(), Ord3.GT: P(PQ(ONE, ONE))}[cmp(x, y)]
    return _from_natural(_INTEGER_FUNCTIONS[name](x, y))


def _apply(operation: str, span: Span, fn: Callable[..., Q], *args: object) -> Q:
    try:
        return fn(*args)
    except DomainError as exc:
        raise EvaluationError(operation=operation, start=span.start, end=span.end, cause=exc) from exc


def _eval(e: Expr) -> Q:
    match e:
        case NatLit(value):
            return _apply('literal', e.span, from_fraq, (value, 1))
        case RatLit(value):
            return _apply('literal', e.span, from_fraq, value)
        case Group(inner):
            return _eval(inner)
        case Neg(operand):
            return ropposite(_eval(operand))
        case BinOp(Operator.POW, left, right):
            base, exponent = _eval(left), _eval(right)
            return _apply('pow', e.span, _power, base, exponent)
        case BinOp(op, left, right):
            a, b = _eval(left), _eval(right)
            operation, fn = _ARITHMETIC[op]
            return _apply(operation, e.span, fn, a, b)
        case Call(name, (first, second)):
            a, b = _eval(first), _eval(second)
            return _apply(name, e.span, _call, name, a, b)
    raise TypeError(e)


def evaluate(e: Expr) -> EvalResult:
    """Evaluate over signed rationals.

    Domain failures come back as an `EvaluationError` naming the failing
    operation and the span of its node.
    """
    try:
        return EvalResult(value=_eval(e))
    except RecursionError:
        return EvalResult(error=ExpressionDepthError())
    except TreeArithError as exc:
        return EvalResult(error=exc)


def evaluate_text(text: str) -> EvalResult:
    """Parse and evaluate; syntax errors are returned like evaluation errors."""
    try:
        e = parse(text)
    except TreeArithError as exc:
        return EvalResult(error=exc)
    return evaluate(e)

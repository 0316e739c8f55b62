"""Terms of the free algebra generated by the leaf `T` and the binary node `C`.

A term denotes a natural number: `T` is 0 and `C(x, y)` is `2**x * (2*y + 1)`.
Every finite tree is a valid term and distinct trees denote distinct numbers,
so structural equality is numeric equality.

The four primitives `succ`, `pred`, `double` and `half` are mutually
recursive. Their linear recursions (along chains of odd or even shapes) run
as loops, so only the left children (exponents, which are exponentially
smaller) are ever recursed into.
"""

from __future__ import annotations

import enum
import typing
from dataclasses import dataclass

from tree_arith.errors import (
    NotEvenPositiveError,
    PredecessorOfZeroError,
    TermSyntaxError,
    UndefinedOnZeroError,
)

if typing.TYPE_CHECKING:
    from collections.abc import Callable

X = typing.TypeVar('X')


class Ord3(enum.IntEnum):
    """Result of a three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1


class Digit(enum.Enum):
    """Bijective base-2 digit: O maps n to 2n+1, I maps n to 2n+2."""

    O = 'o'
    I = 'i'


class Term:
    """Base class of the two term shapes, `Leaf` and `C`."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        return _same_tree(self, other)

    def __hash__(self) -> int:
        return fold(self, _LEAF_HASH, _node_hash)

    def __repr__(self) -> str:
        return format_term(self)


class Leaf(Term):
    """The leaf `T`. There is exactly one instance."""

    __slots__ = ()

    _instance: typing.ClassVar[Leaf | None] = None

    def __new__(cls) -> Leaf:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class C(Term):
    """The node `C(left, right)`."""

    left: Term
    right: Term


T = Leaf()
ONE = C(T, T)

_LEAF_HASH = hash('T')


def _node_hash(left: int, right: int) -> int:
    return hash((left, right))


def _same_tree(a: Term, b: Term) -> bool:
    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        if x is y:
            continue
        if not (isinstance(x, C) and isinstance(y, C)):
            return False
        pending.append((x.right, y.right))
        pending.append((x.left, y.left))
    return True


def fold(t: Term, leaf: X, node: Callable[[X, X], X]) -> X:
    """Fold a term bottom-up: `T` becomes `leaf`, `C(x, y)` becomes `node(f(x), f(y))`.

    Uses an explicit stack, so arbitrarily deep terms are fine.
    """
    values: list[X] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        current, ready = stack.pop()
        if not isinstance(current, C):
            values.append(leaf)
        elif ready:
            right = values.pop()
            left = values.pop()
            values.append(node(left, right))
        else:
            stack.append((current, True))
            stack.append((current.right, False))
            stack.append((current.left, False))
    return values[0]


def node_count(t: Term) -> int:
    """Number of `C` constructors in a term (leaves are free)."""
    return fold(t, 0, lambda left, right: left + right + 1)


def depth(t: Term) -> int:
    """Length of the longest root-to-leaf path."""
    return fold(t, 0, lambda left, right: max(left, right) + 1)


def succ(t: Term) -> Term:
    """Successor.

    `T` becomes `C(T, T)`, an odd `C(T, y)` becomes `double(succ(y))` and an
    even positive `z` becomes `C(T, half(z))`.
    """
    odd_layers = 0
    while isinstance(t, C) and t.left is T:
        t = t.right
        odd_layers += 1
    result = ONE if t is T else C(T, half(t))
    for _ in range(odd_layers):
        result = double(result)
    return result


def pred(t: Term) -> Term:
    """Predecessor; raises `PredecessorOfZeroError` on `T`."""
    if not isinstance(t, C):
        raise PredecessorOfZeroError
    even_layers = 0
    while t.left is not T:
        t = half(t)
        even_layers += 1
    result = T if t.right is T else double(t.right)
    for _ in range(even_layers):
        result = C(T, result)
    return result


def double(t: Term) -> C:
    """Multiply a positive term by two; only the exponent changes."""
    if not isinstance(t, C):
        raise UndefinedOnZeroError('double')
    return C(succ(t.left), t.right)


def half(t: Term) -> C:
    """Divide an even positive term by two."""
    if not isinstance(t, C) or t.left is T:
        raise NotEvenPositiveError
    return C(pred(t.left), t.right)


def make_s(t: Term) -> Term:
    """Generalized constructor S: `x` to `x + 1`."""
    return succ(t)


def view_s(t: Term) -> Term | None:
    """Match S: the predecessor of any positive term, `None` for `T`."""
    if t is T:
        return None
    return pred(t)


def make_d(t: Term) -> Term:
    """Generalized constructor D: `x` to `2x`, for positive `x`."""
    if t is T:
        raise UndefinedOnZeroError('make_d')
    return double(t)


def view_d(t: Term) -> Term | None:
    """Match D: the half of an even positive term."""
    if isinstance(t, C) and isinstance(t.left, C):
        return half(t)
    return None


def make_o(t: Term) -> Term:
    """Generalized constructor O: `x` to `2x + 1`."""
    return C(T, t)


def view_o(t: Term) -> Term | None:
    """Match O: the payload of an odd term."""
    if isinstance(t, C) and t.left is T:
        return t.right
    return None


def make_i(t: Term) -> Term:
    """Generalized constructor I: `x` to `2x + 2`, built as S(O(x))."""
    return succ(make_o(t))


def view_i(t: Term) -> Term | None:
    """Match I: `pred(half(t))` for an even positive term."""
    halved = view_d(t)
    if halved is None:
        return None
    return pred(halved)


def view_digit(t: Term) -> tuple[Digit, Term] | None:
    """Split a positive term into its last bijective base-2 digit and the rest.

    Returns `None` for `T`.
    """
    rest = view_o(t)
    if rest is not None:
        return Digit.O, rest
    rest = view_i(t)
    if rest is not None:
        return Digit.I, rest
    return None


def split_digit(t: Term) -> tuple[Digit, Term]:
    """Like `view_digit`, for callers that already know `t` is positive."""
    step = view_digit(t)
    if step is None:
        raise UndefinedOnZeroError('digit view')
    return step


def make_digit(digit: Digit, t: Term) -> Term:
    """Apply O or I to a term."""
    return make_o(t) if digit is Digit.O else make_i(t)


def format_term(t: Term) -> str:
    """Render a term in the canonical `T | C(term,term)` text format."""
    parts: list[str] = []
    stack: list[Term | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, C):
            parts.append('C(')
            stack.extend((')', item.right, ',', item.left))
        else:
            parts.append('T')
    return ''.join(parts)


def _syntax_error(text: str, index: int, expected: str) -> TermSyntaxError:
    offset = len(text[:index].encode())
    return TermSyntaxError(f'Expected {expected}', text=text, offset=offset)


def _skip_spaces(text: str, index: int) -> int:
    while index < len(text) and text[index].isspace():
        index += 1
    return index


def _expect(text: str, index: int, char: str) -> int:
    index = _skip_spaces(text, index)
    if index >= len(text) or text[index] != char:
        raise _syntax_error(text, index, repr(char))
    return index + 1


def parse_term(text: str) -> Term:
    """Parse the canonical text format; whitespace between tokens is ignored.

    Each open `C(` gets a frame on an explicit stack holding its left child
    once that is complete, so nesting depth is unbounded.
    """
    frames: list[Term | None] = []
    index = 0
    while True:
        index = _skip_spaces(text, index)
        head = text[index] if index < len(text) else ''
        if head == 'C':
            index = _expect(text, index + 1, '(')
            frames.append(None)
            continue
        if head != 'T':
            raise _syntax_error(text, index, "'T' or 'C'")
        value: Term = T
        index += 1
        while frames:
            left = frames[-1]
            if left is None:
                index = _expect(text, index, ',')
                frames[-1] = value
                break
            index = _expect(text, index, ')')
            frames.pop()
            value = C(left, value)
        else:
            index = _skip_spaces(text, index)
            if index != len(text):
                raise _syntax_error(text, index, 'end of input')
            return value

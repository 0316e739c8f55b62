"""Reference algebras and the folds out of them.

`UTerm` is Peano unary (`U`, `Su`), `BTerm` is bijective base-2 (`B`, `Ob`,
`Ib`). Neither carries arithmetic; they exist to witness the isomorphisms with
terms and to give slow, independent conversions to cross-check the bridge.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass

from tree_arith.arith import cmp
from tree_arith.bridge import from_nat
from tree_arith.errors import UnaryBoundExceededError
from tree_arith.terms import Digit, Ord3, T, Term, fold, make_i, make_o, pred, succ, view_digit

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterator

X = typing.TypeVar('X')

DEFAULT_UNARY_BOUND = 10**6


class UTerm:
    """A unary numeral."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UTerm):
            return NotImplemented
        return _unary_length(self) == _unary_length(other)

    def __hash__(self) -> int:
        return hash(('U', _unary_length(self)))

    def __repr__(self) -> str:
        return format_unary(self)


class _Zero(UTerm):
    __slots__ = ()

    _instance: typing.ClassVar[_Zero | None] = None

    def __new__(cls) -> _Zero:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Su(UTerm):
    prev: UTerm


U = _Zero()


class BTerm:
    """A bijective base-2 numeral, least significant digit outermost."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BTerm):
            return NotImplemented
        return list(_digits(self)) == list(_digits(other))

    def __hash__(self) -> int:
        return hash(('B', *_digits(self)))

    def __repr__(self) -> str:
        return format_binary(self) or 'B'


class _Empty(BTerm):
    __slots__ = ()

    _instance: typing.ClassVar[_Empty | None] = None

    def __new__(cls) -> _Empty:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Ob(BTerm):
    rest: BTerm


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Ib(BTerm):
    rest: BTerm


B = _Empty()


def _unary_length(u: UTerm) -> int:
    return fold_unary(u, 0, lambda n: n + 1)


def _digits(b: BTerm) -> Iterator[Digit]:
    """Digits outermost first."""
    while True:
        match b:
            case Ob(rest):
                yield Digit.O
            case Ib(rest):
                yield Digit.I
            case _:
                return
        b = rest


def fold_magma(t: Term, leaf: X, node: Callable[[X, X], X]) -> X:
    """The unique morphism from terms with `T -> leaf` and `C -> node`."""
    return fold(t, leaf, node)


def fold_unary(u: UTerm, base: X, step: Callable[[X], X]) -> X:
    """The unique morphism from unary numerals with `U -> base` and `Su -> step`."""
    count = 0
    while isinstance(u, Su):
        u = u.prev
        count += 1
    value = base
    for _ in range(count):
        value = step(value)
    return value


def fold_binary(b: BTerm, base: X, o_fn: Callable[[X], X], i_fn: Callable[[X], X]) -> X:
    """The unique morphism from base-2 numerals with `B -> base`, `Ob -> o_fn`, `Ib -> i_fn`."""
    value = base
    for digit in reversed(list(_digits(b))):
        value = o_fn(value) if digit is Digit.O else i_fn(value)
    return value


def t_to_b(t: Term) -> BTerm:
    """Read the bijective base-2 digits of a term through the O/I views."""
    digits: list[Digit] = []
    while (step := view_digit(t)) is not None:
        digit, t = step
        digits.append(digit)
    result: BTerm = B
    for digit in reversed(digits):
        result = Ob(result) if digit is Digit.O else Ib(result)
    return result


def b_to_t(b: BTerm) -> Term:
    return fold_binary(b, T, make_o, make_i)


def t_to_u(t: Term, *, bound: int = DEFAULT_UNARY_BOUND) -> UTerm:
    """Unary numeral of a term.

    Raises:
        UnaryBoundExceededError: if the term denotes more than `bound`.
    """
    if cmp(t, from_nat(bound)) is Ord3.GT:
        raise UnaryBoundExceededError(bound)
    result: UTerm = U
    while t is not T:
        t = pred(t)
        result = Su(result)
    return result


def u_to_t(u: UTerm) -> Term:
    return fold_unary(u, T, succ)


def format_unary(u: UTerm) -> str:
    """Render as `S^n`."""
    return f'S^{_unary_length(u)}'


def format_binary(b: BTerm) -> str:
    """Render as a string over `o`/`i`, outermost digit first; `B` is the empty string."""
    return ''.join(digit.value for digit in _digits(b))


def nat_via_binary(t: Term) -> int:
    """Denotation computed through the base-2 view, independent of the bridge."""
    return fold_binary(t_to_b(t), 0, lambda n: 2 * n + 1, lambda n: 2 * n + 2)


def nat_via_magma(t: Term) -> int:
    """Denotation computed by folding the defining equations over `int`."""
    return fold_magma(t, 0, lambda x, y: 2**x * (2 * y + 1))

"""Conversions between terms and Python integers.

These are the fast converters: they work on the real constructors `T` and
`C` with bit-level operations on `int`, and serve both as the I/O boundary and
as the independent oracle for the arithmetic.
"""

from __future__ import annotations

import re
import sys

from tree_arith.errors import (
    NaturalSyntaxError,
    NegativeNaturalError,
    ShiftBudgetExceededError,
)
from tree_arith.terms import C, T, Term, fold

DEFAULT_SHIFT_BUDGET = 1 << 20

_DECIMAL = re.compile(r'[0-9]+')

# Decimal I/O of naturals has no length limit.
sys.set_int_max_str_digits(0)


def trailing_zeros(n: int) -> int:
    """2-adic valuation of a positive integer."""
    return (n & -n).bit_length() - 1


def odd_part_half(n: int) -> int:
    """`(n / 2**v - 1) / 2` for a positive `n` with valuation `v`."""
    return n >> (trailing_zeros(n) + 1)


def from_nat(i: int) -> Term:
    """Build the term denoting `i`.

    A positive `i` becomes `C(from_nat(v), from_nat(rest))` where `v` is its
    2-adic valuation and `rest` is `(i / 2**v - 1) / 2`. Both are strictly
    smaller than `i`; they are expanded with a work stack.
    """
    if i < 0:
        raise NegativeNaturalError(i)
    built: list[Term] = []
    work: list[tuple[int, bool]] = [(i, False)]
    while work:
        n, ready = work.pop()
        if n == 0:
            built.append(T)
        elif ready:
            right = built.pop()
            left = built.pop()
            built.append(C(left, right))
        else:
            work.append((n, True))
            work.append((odd_part_half(n), False))
            work.append((trailing_zeros(n), False))
    return built[0]


def to_nat(t: Term, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> int:
    """The natural number a term denotes.

    Raises:
        ShiftBudgetExceededError: if some left child denotes an exponent larger
            than `shift_budget`.
    """

    def node(exponent: int, rest: int) -> int:
        if exponent > shift_budget:
            raise ShiftBudgetExceededError(shift_budget)
        return (2 * rest + 1) << exponent

    return fold(t, 0, node)


def term(n: int) -> Term:
    """Alias of `from_nat`."""
    return from_nat(n)


def nat(t: Term, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> int:
    """Alias of `to_nat`."""
    return to_nat(t, shift_budget=shift_budget)


def parse_nat(text: str) -> int:
    """Parse an unsigned decimal natural of any length."""
    if _DECIMAL.fullmatch(text) is None:
        raise NaturalSyntaxError(text)
    return int(text)


def format_nat(n: int) -> str:
    """Canonical decimal rendering (no sign, no leading zeros)."""
    if n < 0:
        raise NegativeNaturalError(n)
    return str(n)

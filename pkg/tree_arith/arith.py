"""Natural number arithmetic computed directly on terms.

Comparison, addition and subtraction walk both operands digit by digit through
the O/I views. The walk collects one record per digit pair and the results
are rebuilt from the innermost pair outwards, which keeps every operation
iterative in the bit length.
"""

from __future__ import annotations

from tree_arith.errors import (
    DivisionByZeroError,
    PredecessorOfZeroError,
    SubtractionUnderflowError,
)
from tree_arith.terms import (
    ONE,
    C,
    Digit,
    Ord3,
    T,
    Term,
    double,
    make_i,
    make_o,
    pred,
    split_digit,
    succ,
)


def _strengthen(rel: Ord3, verdict: Ord3) -> Ord3:
    return verdict if rel is Ord3.EQ else rel


def cmp(u: Term, v: Term) -> Ord3:
    """Compare the numbers two terms denote."""
    verdicts: list[Ord3 | None] = []
    while u is not T and v is not T:
        du, u = split_digit(u)
        dv, v = split_digit(v)
        if du is dv:
            verdicts.append(None)
        else:
            verdicts.append(Ord3.LT if du is Digit.O else Ord3.GT)
    if u is T:
        rel = Ord3.EQ if v is T else Ord3.LT
    else:
        rel = Ord3.GT
    for verdict in reversed(verdicts):
        if verdict is not None:
            rel = _strengthen(rel, verdict)
    return rel


def add(u: Term, v: Term) -> Term:
    """Sum of two terms."""
    digits: list[tuple[Digit, Digit]] = []
    while u is not T and v is not T:
        du, u = split_digit(u)
        dv, v = split_digit(v)
        digits.append((du, dv))
    result = v if u is T else u
    for du, dv in reversed(digits):
        if du is Digit.O and dv is Digit.O:
            result = make_i(result)
        elif du is Digit.I and dv is Digit.I:
            result = make_i(succ(result))
        else:
            result = make_o(succ(result))
    return result


def sub(u: Term, v: Term) -> Term:
    """Difference `u - v`.

    Raises:
        SubtractionUnderflowError: if `v` denotes a larger number than `u`.
    """
    digits: list[tuple[Digit, Digit]] = []
    while v is not T:
        if u is T:
            raise SubtractionUnderflowError
        du, u = split_digit(u)
        dv, v = split_digit(v)
        digits.append((du, dv))
    result = u
    try:
        for du, dv in reversed(digits):
            odd = make_o(result)
            if du is Digit.I and dv is Digit.O:
                result = odd
            elif du is Digit.O and dv is Digit.I:
                result = pred(pred(odd))
            else:
                result = pred(odd)
    except PredecessorOfZeroError as exc:
        raise SubtractionUnderflowError from exc
    return result


def multiply(u: Term, v: Term) -> Term:
    """Product, via `C(hx,tx) * C(hy,ty) = C(hx+hy, tx+ty + 2*tx*ty)`."""
    frames: list[tuple[Term, Term, Term, Term]] = []
    while isinstance(u, C) and isinstance(v, C):
        frames.append((u.left, u.right, v.left, v.right))
        u, v = u.right, v.right
    result = T
    for hx, tx, hy, ty in reversed(frames):
        twice = pred(make_o(result))
        result = C(add(hx, hy), add(add(tx, ty), twice))
    return result


def exp2(x: Term) -> Term:
    """`2**x` in a single constructor application."""
    return C(x, T)


def power(u: Term, v: Term) -> Term:
    """`u ** v` by squaring over the digits of `v`; `power(x, T)` is one."""
    factors: list[Term] = []
    while v is not T:
        digit, v = split_digit(v)
        if digit is Digit.O:
            factors.append(u)
            u = multiply(u, u)
        else:
            u = multiply(u, u)
            factors.append(u)
    result = ONE
    for factor in reversed(factors):
        result = multiply(factor, result)
    return result


def _try_to_double(x: Term, y: Term) -> Term:
    """Largest `k` with `y * 2**k <= x`, for `y <= x`."""
    k = T
    while cmp(x, y) is not Ord3.LT:
        y = double(y)
        k = succ(k)
    return pred(k)


def div_and_rem(x: Term, y: Term) -> tuple[Term, Term]:
    """Quotient and remainder.

    Each step subtracts the largest `2**q * y` that fits and records `q`; the
    quotient is the sum of the recorded powers of two.

    Raises:
        DivisionByZeroError: if `y` is `T`.
    """
    if y is T:
        raise DivisionByZeroError('div_and_rem')
    exponents: list[Term] = []
    while cmp(x, y) is not Ord3.LT:
        q = _try_to_double(x, y)
        x = sub(x, multiply(exp2(q), y))
        exponents.append(q)
    quotient = T
    for q in reversed(exponents):
        quotient = add(exp2(q), quotient)
    return quotient, x


def divide(x: Term, y: Term) -> Term:
    """Quotient of `x` by `y`; see `div_and_rem`."""
    return div_and_rem(x, y)[0]


def remainder(x: Term, y: Term) -> Term:
    """Remainder of `x` by `y`; see `div_and_rem`."""
    return div_and_rem(x, y)[1]


def gcd(x: Term, y: Term) -> Term:
    """Greatest common divisor; `gcd(x, T)` is `x`, so `gcd(T, T)` is `T`."""
    while y is not T:
        x, y = y, remainder(x, y)
    return x


def lcm(x: Term, y: Term) -> Term:
    """Least common multiple; `lcm(T, T)` raises `DivisionByZeroError`."""
    return multiply(divide(x, gcd(x, y)), y)

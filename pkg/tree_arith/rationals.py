"""Signed exact rationals over terms.

Positive rationals are co-prime pairs of positive terms (`PQ`). The
Calkin-Wilf tree gives a bijection between terms and `PQ`: the O digit of a
term takes a node `x/y` to its left child `x/(x+y)` and the I digit to its
right child `(x+y)/y`. Signed rationals (`Q`) tag a `PQ` as positive or
negative, and zero is its own case. Reading the parity of a term as the sign
extends the bijection to all of the rationals.

Building a `PQ` checks that its components are positive and co-prime;
`pqsimpl` reduces an arbitrary pair first.
"""

from __future__ import annotations

import re
import typing
from dataclasses import dataclass

from tree_arith.arith import add, cmp, divide, gcd, multiply, power, sub
from tree_arith.bridge import DEFAULT_SHIFT_BUDGET, from_nat, to_nat
from tree_arith.errors import (
    DivisionByZeroError,
    FractionSyntaxError,
    NonCanonicalPairError,
    ZeroComponentError,
    ZeroInverseError,
)
from tree_arith.terms import ONE, Digit, Ord3, T, Term, make_digit, make_i, make_o, split_digit, view_digit, view_o

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterator

_FRACTION = re.compile(r'\s*(-?)([0-9]+)(?:/([0-9]+))?\s*')


@dataclass(frozen=True, slots=True)
class PQ:
    """A positive rational as a co-prime pair of positive terms.

    Raises:
        NonCanonicalPairError: if a component is `T` or the components share
            a factor.
    """

    numerator: Term
    denominator: Term

    def __post_init__(self) -> None:
        _require_canonical(self.numerator, self.denominator)

    def __iter__(self) -> Iterator[Term]:
        yield self.numerator
        yield self.denominator

    @classmethod
    def _unchecked(cls, numerator: Term, denominator: Term) -> PQ:
        """Build a pair already known to be co-prime, skipping the gcd."""
        pq = object.__new__(cls)
        object.__setattr__(pq, 'numerator', numerator)
        object.__setattr__(pq, 'denominator', denominator)
        return pq


@dataclass(frozen=True, slots=True)
class Z:
    """Zero."""


@dataclass(frozen=True, slots=True)
class P:
    """A positive rational."""

    value: PQ


@dataclass(frozen=True, slots=True)
class M:
    """A negative rational; `value` is its magnitude."""

    value: PQ


Q = Z | P | M


class Fraction(typing.NamedTuple):
    """Integer numerator/denominator pair used at the I/O boundary."""

    numerator: int
    denominator: int


def t2pq(u: Term) -> PQ:
    """Walk the Calkin-Wilf tree along the digits of `u`, starting at 1/1."""
    digits: list[Digit] = []
    while (step := view_digit(u)) is not None:
        digit, u = step
        digits.append(digit)
    x, y = ONE, ONE
    for digit in reversed(digits):
        if digit is Digit.O:
            y = add(x, y)
        else:
            x = add(x, y)
    return PQ._unchecked(x, y)


def _require_canonical(a: Term, b: Term) -> None:
    if a is T or b is T:
        raise NonCanonicalPairError('zero component')
    if ONE not in (a, b) and gcd(a, b) != ONE:
        raise NonCanonicalPairError('components share a factor')


def pq2t(uv: PQ | tuple[Term, Term]) -> Term:
    """Position of a co-prime pair in the Calkin-Wilf tree; inverse of `t2pq`.

    Raises:
        NonCanonicalPairError: if a component is `T` or the components are
            not co-prime.
    """
    a, b = uv
    if not isinstance(uv, PQ):
        _require_canonical(a, b)
    digits: list[Digit] = []
    while True:
        match cmp(a, b):
            case Ord3.GT:
                digits.append(Digit.I)
                a = sub(a, b)
            case Ord3.LT:
                digits.append(Digit.O)
                b = sub(b, a)
            case Ord3.EQ:
                break
    result = T
    for digit in reversed(digits):
        result = make_digit(digit, result)
    return result


def from_t(t: Term) -> Q:
    """`T` is zero, odd terms are negative and even positive terms are positive."""
    if t is T:
        return Z()
    odd = view_o(t)
    if odd is not None:
        return M(t2pq(odd))
    _, rest = split_digit(t)
    return P(t2pq(rest))


def to_t(q: Q) -> Term:
    """Inverse of `from_t`."""
    match q:
        case Z():
            return T
        case M(value):
            return make_o(pq2t(value))
        case P(value):
            return make_i(pq2t(value))
    raise TypeError(q)


def nat2rat(n: int) -> Q:
    """The signed rational at position `n` of the Calkin-Wilf enumeration."""
    return from_t(from_nat(n))


def rat2nat(q: Q, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> int:
    """Position of `q` in the Calkin-Wilf enumeration; inverse of `nat2rat`.

    Args:
        q: Any signed rational.
        shift_budget: Passed on to `to_nat`.

    Returns:
        The natural `n` with `nat2rat(n) == q`.
    """
    return to_nat(to_t(q), shift_budget=shift_budget)


def pqsimpl(xy: tuple[Term, Term]) -> PQ:
    """Reduce a pair of positive terms by their gcd.

    Raises:
        ZeroComponentError: if either component is `T`.
    """
    x, y = xy
    if x is T or y is T:
        raise ZeroComponentError
    if ONE in (x, y):
        return PQ._unchecked(x, y)
    z = gcd(x, y)
    if z == ONE:
        return PQ._unchecked(x, y)
    return PQ._unchecked(divide(x, z), divide(y, z))


def fraq2pq(nd: tuple[int, int]) -> PQ:
    """Reduce a pair of positive integers to a `PQ`."""
    return pqsimpl((from_nat(nd[0]), from_nat(nd[1])))


def pq2fraq(nd: PQ, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> tuple[int, int]:
    """Numerator and denominator as integers."""
    return to_nat(nd.numerator, shift_budget=shift_budget), to_nat(nd.denominator, shift_budget=shift_budget)


def pqop(f: Callable[[Term, Term], Term], xy: PQ, uv: PQ) -> PQ:
    """Apply `f` to the numerators over the common denominator `lcm(y, v)`."""
    x, y = xy
    u, v = uv
    z = gcd(y, v)
    y1 = divide(y, z)
    v1 = divide(v, z)
    num = f(multiply(x, v1), multiply(u, y1))
    den = multiply(z, multiply(y1, v1))
    return pqsimpl((num, den))


def pqadd(a: PQ, b: PQ) -> PQ:
    """Sum of two positive rationals."""
    return pqop(add, a, b)


def pqsub(a: PQ, b: PQ) -> PQ:
    """`a - b` for `a > b`; equal operands raise `ZeroComponentError`."""
    return pqop(sub, a, b)


def pqcmp(xy: PQ, uv: PQ) -> Ord3:
    """Compare by cross-multiplying: `x/y` against `u/v` is `x*v` against `y*u`."""
    x, y = xy
    u, v = uv
    return cmp(multiply(x, v), multiply(y, u))


def pqmultiply(a: PQ, b: PQ) -> PQ:
    """Product of two positive rationals, reduced."""
    return pqsimpl((multiply(a.numerator, b.numerator), multiply(a.denominator, b.denominator)))


def pqinverse(a: PQ) -> PQ:
    """Swap numerator and denominator."""
    return PQ._unchecked(a.denominator, a.numerator)


def pqdivide(a: PQ, b: PQ) -> PQ:
    """`a / b` as `a` times the inverse of `b`."""
    return pqmultiply(a, pqinverse(b))


def ropposite(x: Q) -> Q:
    """Flip the sign; zero stays zero."""
    match x:
        case M(value):
            return P(value)
        case P(value):
            return M(value)
    return x


def radd(a: Q, b: Q) -> Q:
    """Sum of two signed rationals.

    Operands of opposite sign subtract the smaller magnitude from the larger,
    so `pqsub` never sees equal operands.
    """
    match a, b:
        case Z(), _:
            return b
        case _, Z():
            return a
        case M(x), M(y):
            return M(pqadd(x, y))
        case P(x), P(y):
            return P(pqadd(x, y))
        case P(x), M(y):
            match pqcmp(x, y):
                case Ord3.LT:
                    return M(pqsub(y, x))
                case Ord3.EQ:
                    return Z()
                case Ord3.GT:
                    return P(pqsub(x, y))
        case M(x), P(y):
            return ropposite(radd(P(x), M(y)))
    raise TypeError((a, b))


def rsub(a: Q, b: Q) -> Q:
    """`a - b` as `a + (-b)`."""
    return radd(a, ropposite(b))


def rmultiply(a: Q, b: Q) -> Q:
    """Product of two signed rationals."""
    match a, b:
        case Z(), _:
            return Z()
        case _, Z():
            return Z()
        case M(x), M(y):
            return P(pqmultiply(x, y))
        case P(x), P(y):
            return P(pqmultiply(x, y))
        case M(x), P(y):
            return M(pqmultiply(x, y))
        case P(x), M(y):
            return M(pqmultiply(x, y))
    raise TypeError((a, b))


def rinverse(a: Q) -> Q:
    """Multiplicative inverse.

    Raises:
        ZeroInverseError: for zero.
    """
    match a:
        case M(x):
            return M(pqinverse(x))
        case P(x):
            return P(pqinverse(x))
    raise ZeroInverseError


def rdivide(a: Q, b: Q) -> Q:
    """`a / b`.

    Raises:
        DivisionByZeroError: if `b` is zero.
    """
    if isinstance(b, Z):
        raise DivisionByZeroError('rdivide')
    return rmultiply(a, rinverse(b))


def rpower(q: Q, n: Term) -> Q:
    """`q ** n` for a natural exponent, with `0 ** 0` equal to one.

    Powers of co-prime components stay co-prime, so no reduction is needed.
    """
    if n is T:
        return P(PQ._unchecked(ONE, ONE))
    match q:
        case Z():
            return q
        case P(x):
            return P(PQ._unchecked(power(x.numerator, n), power(x.denominator, n)))
        case M(x):
            magnitude = PQ._unchecked(power(x.numerator, n), power(x.denominator, n))
            odd = view_o(n) is not None
            return M(magnitude) if odd else P(magnitude)
    raise TypeError(q)


def to_fraq(q: Q, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> Fraction:
    """Export as a reduced integer fraction with the sign on the numerator."""
    match q:
        case Z():
            return Fraction(0, 1)
        case M(value):
            num, den = pq2fraq(value, shift_budget=shift_budget)
            return Fraction(-num, den)
        case P(value):
            return Fraction(*pq2fraq(value, shift_budget=shift_budget))
    raise TypeError(q)


def from_fraq(f: Fraction | tuple[int, int]) -> Q:
    """Import a signed fraction, reducing it and moving the sign to the numerator.

    Raises:
        DivisionByZeroError: if the denominator is zero.
    """
    num, den = f
    if den == 0:
        raise DivisionByZeroError('fraction')
    if den < 0:
        num, den = -num, -den
    if num == 0:
        return Z()
    magnitude = fraq2pq((abs(num), den))
    return M(magnitude) if num < 0 else P(magnitude)


def parse_fraction(text: str) -> Fraction:
    """Parse `[-]digits[/digits]`; a missing denominator means 1.

    Raises:
        FractionSyntaxError: if the text is not a fraction.
        DivisionByZeroError: if the denominator is zero.
    """
    found = _FRACTION.fullmatch(text)
    if found is None:
        raise FractionSyntaxError(text)
    sign, num, den = found.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise DivisionByZeroError('fraction')
    numerator = int(num)
    return Fraction(-numerator if sign else numerator, denominator)


def format_fraction(f: Fraction, *, machine: bool = True) -> str:
    """Render `n/d`; with `machine=False` a denominator of 1 is dropped."""
    if not machine and f.denominator == 1:
        return str(f.numerator)
    return f'{f.numerator}/{f.denominator}'


def cw_children(pq: PQ) -> tuple[PQ, PQ]:
    """Left child `x/(x+y)` and right child `(x+y)/y` of a Calkin-Wilf node."""
    x, y = pq
    total = add(x, y)
    return PQ._unchecked(x, total), PQ._unchecked(total, y)


def cw_level(k: int) -> list[PQ]:
    """Level `k` of the Calkin-Wilf tree, left to right (level 0 is 1/1)."""
    first = (1 << k) - 1
    return [t2pq(from_nat(i)) for i in range(first, 2 * first + 1)]

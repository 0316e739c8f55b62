"""Shared test utilities."""

from __future__ import annotations

from hypothesis import strategies as st

from tree_arith.arith import gcd
from tree_arith.bridge import from_nat
from tree_arith.rationals import PQ, Fraction, nat2rat
from tree_arith.terms import ONE, C, T, Term

# Small values hit the interesting boundaries (T, ONE, first odd/even shapes);
# wide ones exercise long digit walks.
naturals = st.one_of(
    st.integers(min_value=0, max_value=64),
    st.integers(min_value=0, max_value=2**64),
    st.integers(min_value=0, max_value=2**128),
)

positive_naturals = naturals.map(lambda n: n + 1)

terms = naturals.map(from_nat)

positive_terms = positive_naturals.map(from_nat)


def shaped_terms(max_left_depth: int = 2) -> st.SearchStrategy[Term]:
    """Arbitrary tree shapes, with left nesting bounded so values stay printable.

    Args:
        max_left_depth: How many times a left child may itself have a
            non-trivial left child.

    Returns:
        A strategy of terms built directly from `T` and `C`.
    """
    if max_left_depth == 0:
        exponents: st.SearchStrategy[Term] = st.just(T)
    else:
        exponents = shaped_terms(max_left_depth - 1)
    return st.recursive(
        st.just(T),
        lambda rest: st.builds(C, exponents, rest),
        max_leaves=6,
    )


# Rationals drawn through the signed Calkin-Wilf enumeration of 16-bit indices
# keep component sizes small enough for the slow division.
rationals = st.integers(min_value=0, max_value=2**16).map(nat2rat)

fractions = st.builds(
    Fraction,
    st.integers(min_value=-(2**20), max_value=2**20),
    st.integers(min_value=1, max_value=2**20),
)


def is_canonical(pq: PQ) -> bool:
    """Both components positive and co-prime."""
    return pq.numerator is not T and pq.denominator is not T and gcd(pq.numerator, pq.denominator) == ONE

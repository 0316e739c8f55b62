from __future__ import annotations

import fractions

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tree_arith.errors import (
    DivisionByZeroError,
    EvaluationError,
    ExpressionSyntaxError,
)
from tree_arith.expr import (
    FUNCTIONS,
    BinOp,
    Call,
    Expr,
    Group,
    NatLit,
    Neg,
    Operator,
    RatLit,
    Span,
    evaluate,
    evaluate_text,
    format_expr,
    parse,
    tokenize,
)
from tree_arith.rationals import Fraction, from_fraq, to_fraq

small_fractions = st.builds(
    fractions.Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=50),
)


def _leaves() -> st.SearchStrategy[Expr]:
    return st.one_of(
        st.integers(min_value=0, max_value=10**6).map(NatLit),
        st.builds(
            Fraction,
            st.integers(min_value=0, max_value=999),
            st.integers(min_value=1, max_value=999),
        ).map(RatLit),
    )


def _extend(children: st.SearchStrategy[Expr]) -> st.SearchStrategy[Expr]:
    return st.one_of(
        children.map(Neg),
        children.map(Group),
        st.builds(BinOp, st.sampled_from(list(Operator)), children, children),
        st.builds(
            Call,
            st.sampled_from(FUNCTIONS),
            st.tuples(children, children),
        ),
    )


expressions = st.recursive(_leaves(), _extend, max_leaves=12)


def _strip_groups(e: Expr) -> Expr:
    """Drop `Group` nodes, which the printer may add where precedence needs them."""
    match e:
        case Group(inner):
            return _strip_groups(inner)
        case Neg(operand):
            return Neg(_strip_groups(operand))
        case BinOp(op, left, right):
            return BinOp(op, _strip_groups(left), _strip_groups(right))
        case Call(name, args):
            return Call(name, tuple(_strip_groups(arg) for arg in args))
    return e


def _value(text: str) -> fractions.Fraction:
    result = evaluate_text(text)
    assert result.ok, result.error
    assert result.value is not None
    f = to_fraq(result.value)
    return fractions.Fraction(f.numerator, f.denominator)


def _literal(f: fractions.Fraction) -> str:
    text = f'{abs(f.numerator)}/{f.denominator}'
    return f'-{text}' if f < 0 else text


@pytest.mark.parametrize(
    ('text', 'expected'),
    [
        ('1/2 + 1/3', BinOp(Operator.ADD, RatLit(Fraction(1, 2)), RatLit(Fraction(1, 3)))),
        ('2^10', BinOp(Operator.POW, NatLit(2), NatLit(10))),
        ('-3', Neg(NatLit(3))),
        ('(7)', Group(NatLit(7))),
        ('gcd(6, 4)', Call('gcd', (NatLit(6), NatLit(4)))),
        ('1/2 / 3', BinOp(Operator.DIV, RatLit(Fraction(1, 2)), NatLit(3))),
    ],
)
def test_parse_examples(text: str, expected: Expr) -> None:
    assert parse(text) == expected


@pytest.mark.parametrize(
    ('text', 'expected'),
    [
        (
            '1 + 2 * 3',
            BinOp(Operator.ADD, NatLit(1), BinOp(Operator.MUL, NatLit(2), NatLit(3))),
        ),
        (
            '1 - 2 - 3',
            BinOp(Operator.SUB, BinOp(Operator.SUB, NatLit(1), NatLit(2)), NatLit(3)),
        ),
        (
            '2 ^ 3 ^ 2',
            BinOp(Operator.POW, NatLit(2), BinOp(Operator.POW, NatLit(3), NatLit(2))),
        ),
        (
            '-2 ^ 2',
            Neg(BinOp(Operator.POW, NatLit(2), NatLit(2))),
        ),
        (
            '-2 * 3',
            BinOp(Operator.MUL, Neg(NatLit(2)), NatLit(3)),
        ),
        (
            '2 ^ -1',
            BinOp(Operator.POW, NatLit(2), Neg(NatLit(1))),
        ),
    ],
)
def test_precedence(text: str, expected: Expr) -> None:
    assert parse(text) == expected


def test_spans_are_byte_offsets() -> None:
    e = parse('12 + 3/4')
    assert isinstance(e, BinOp)
    assert e.span == Span(0, 8)
    assert e.left.span == Span(0, 2)
    assert e.right.span == Span(5, 8)


def test_tokenize_counts_bytes() -> None:
    tokens = tokenize('π + 1')
    assert [t.kind for t in tokens] == ['invalid', '+', 'number', 'end']
    assert tokens[1].start == 3
    assert tokens[-1].start == len('π + 1'.encode())


@pytest.mark.parametrize(
    ('text', 'offset'),
    [
        ('gcd(6,)', 6),
        ('', 0),
        ('1 +', 3),
        ('(1 + 2', 6),
        ('1 2', 2),
        ('foo(1, 2)', 0),
        ('gcd(1)', 5),
        ('1 $ 2', 2),
        ('π', 0),
        ('1 + π', 4),
    ],
)
def test_parse_errors_carry_offsets(text: str, offset: int) -> None:
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        parse(text)
    assert exc_info.value.offset == offset
    assert exc_info.value.expected


def test_parse_error_lists_expected_tokens() -> None:
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        parse('gcd(6,)')
    assert exc_info.value.expected == {'number', 'fraction', 'name', '(', '-'}


@given(expressions)
def test_printed_expressions_parse_back(e: Expr) -> None:
    """Added parentheses come back as `Group` nodes; nothing else changes."""
    text = format_expr(e)
    reparsed = parse(text)
    assert _strip_groups(reparsed) == _strip_groups(e)
    assert format_expr(reparsed) == text


@given(expressions)
def test_parsed_trees_survive_printing_exactly(e: Expr) -> None:
    reparsed = parse(format_expr(e))

    assert parse(format_expr(reparsed)) == reparsed


@pytest.mark.parametrize(
    ('e', 'text'),
    [
        (BinOp(Operator.MUL, BinOp(Operator.ADD, NatLit(1), NatLit(2)), NatLit(3)), '(1 + 2) * 3'),
        (BinOp(Operator.SUB, NatLit(1), BinOp(Operator.SUB, NatLit(2), NatLit(3))), '1 - (2 - 3)'),
        (BinOp(Operator.POW, BinOp(Operator.POW, NatLit(2), NatLit(3)), NatLit(2)), '(2 ^ 3) ^ 2'),
        (BinOp(Operator.POW, Neg(NatLit(2)), NatLit(2)), '(-2) ^ 2'),
        (BinOp(Operator.POW, NatLit(2), Neg(NatLit(1))), '2 ^ -1'),
        (Neg(BinOp(Operator.ADD, NatLit(1), NatLit(2))), '-(1 + 2)'),
        (Call('lcm', (NatLit(4), RatLit(Fraction(6, 1)))), 'lcm(4, 6/1)'),
    ],
)
def test_format_expr(e: Expr, text: str) -> None:
    assert format_expr(e) == text


@pytest.mark.parametrize(
    ('text', 'expected'),
    [
        ('1/2 + 1/3', fractions.Fraction(5, 6)),
        ('2^10 / 3', fractions.Fraction(1024, 3)),
        ('6/4', fractions.Fraction(3, 2)),
        ('1/2 / 3', fractions.Fraction(1, 6)),
        ('-2 ^ 2', fractions.Fraction(-4)),
        ('(-2) ^ 3', fractions.Fraction(-8)),
        ('(2/3) ^ 2', fractions.Fraction(4, 9)),
        ('7 ^ 0', fractions.Fraction(1)),
        ('0 ^ 0', fractions.Fraction(1)),
        ('1 - 1', fractions.Fraction(0)),
        ('3 - 5', fractions.Fraction(-2)),
        ('2 * (3 + 4) - 10 / 4', fractions.Fraction(23, 2)),
        ('gcd(12, 18)', fractions.Fraction(6)),
        ('lcm(4, 6)', fractions.Fraction(12)),
        ('div(17, 5)', fractions.Fraction(3)),
        ('mod(17, 5)', fractions.Fraction(2)),
        ('cmp(2, 3)', fractions.Fraction(-1)),
        ('cmp(3, 3)', fractions.Fraction(0)),
        ('cmp(4, 3)', fractions.Fraction(1)),
        ('div(6/2, 3)', fractions.Fraction(1)),
        ('gcd(0, 5)', fractions.Fraction(5)),
        ('123456789012345678901234567890 + 1', fractions.Fraction(123456789012345678901234567891)),
    ],
)
def test_evaluate_examples(text: str, expected: fractions.Fraction) -> None:
    assert _value(text) == expected


def test_evaluate_text_handles_long_literals() -> None:
    """Literals past the interpreter's int/str digit cap still evaluate."""
    digits = '1' + '0' * 5_000

    assert _value(f'{digits} + 1') == 10**5_000 + 1
    assert _value(f'1/{digits}') == fractions.Fraction(1, 10**5_000)


def test_evaluate_takes_parsed_trees() -> None:
    result = evaluate(BinOp(Operator.MUL, NatLit(3), RatLit(Fraction(1, 3))))
    assert result.ok
    assert result.value == from_fraq((1, 1))


@pytest.mark.parametrize(
    ('text', 'kind', 'operation', 'span'),
    [
        ('1/0', 'division-by-zero', 'literal', (0, 3)),
        ('1 / 0', 'division-by-zero', 'rdivide', (0, 5)),
        ('1 + 2 / (3 - 3)', 'division-by-zero', 'rdivide', (4, 15)),
        ('2 ^ -1', 'bad-exponent', 'pow', (0, 6)),
        ('2 ^ (1/2)', 'bad-exponent', 'pow', (0, 9)),
        ('gcd(1/2, 4)', 'non-integer-argument', 'gcd', (0, 11)),
        ('mod(-3, 2)', 'non-integer-argument', 'mod', (0, 10)),
        ('div(4, 0)', 'division-by-zero', 'div', (0, 9)),
        ('mod(4, 0)', 'division-by-zero', 'mod', (0, 9)),
    ],
)
def test_evaluation_errors_name_operation_and_span(
    text: str,
    kind: str,
    operation: str,
    span: tuple[int, int],
) -> None:
    result = evaluate_text(text)
    assert not result.ok
    assert result.value is None
    error = result.error
    assert isinstance(error, EvaluationError)
    assert error.kind == kind
    assert error.operation == operation
    assert (error.start, error.end) == span


def test_division_by_zero_keeps_its_cause() -> None:
    error = evaluate_text('1 / 0').error
    assert isinstance(error, EvaluationError)
    assert isinstance(error.cause, DivisionByZeroError)
    assert error.exit_code == 1


def test_syntax_errors_are_returned() -> None:
    error = evaluate_text('gcd(6,)').error
    assert isinstance(error, ExpressionSyntaxError)
    assert error.offset == 6
    assert error.exit_code == 2


@given(small_fractions, small_fractions)
def test_addition_commutes(a: fractions.Fraction, b: fractions.Fraction) -> None:
    left = _value(f'{_literal(a)} + {_literal(b)}')
    right = _value(f'{_literal(b)} + {_literal(a)}')
    assert left == right == a + b


@given(small_fractions, small_fractions)
def test_evaluation_matches_oracle(a: fractions.Fraction, b: fractions.Fraction) -> None:
    x, y = _literal(a), _literal(b)
    assert _value(f'{x} - {y}') == a - b
    assert _value(f'({x}) * ({y})') == a * b
    if b:
        assert _value(f'({x}) / ({y})') == a / b


def test_deeply_nested_input_is_an_error_not_a_crash() -> None:
    result = evaluate_text('(' * 50_000 + '1' + ')' * 50_000)
    assert not result.ok
    assert result.error is not None
    assert result.error.kind == 'expression-too-deep'

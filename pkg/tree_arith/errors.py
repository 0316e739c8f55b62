from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    from collections.abc import Iterable
    from pathlib import Path


class TreeArithError(RuntimeError):
    """Base error for tree-arith."""

    kind: str = 'tree-arith-error'
    exit_code: typing.ClassVar[int] = 1


class DomainError(TreeArithError):
    """Raised when an operation is applied outside of its domain."""

    kind = 'domain-error'
    exit_code = 1


class SyntaxParseError(TreeArithError):
    """Raised when text cannot be parsed into a value."""

    kind = 'parse-error'
    exit_code = 2

    text: str
    offset: int | None

    def __init__(self, message: str, *, text: str, offset: int | None = None) -> None:
        self.text = text
        self.offset = offset
        if offset is not None:
            message = f'{message} at offset {offset}'
        super().__init__(message)


class PredecessorOfZeroError(DomainError):
    """Raised when the predecessor of T (zero) is requested."""

    kind = 'zero-predecessor'

    def __init__(self) -> None:
        super().__init__('T has no predecessor.')


class UndefinedOnZeroError(DomainError):
    """Raised by operations that are only defined for positive terms."""

    kind = 'undefined-on-zero'

    operation: str

    def __init__(self, operation: str) -> None:
        self.operation = operation
        super().__init__(f'{operation} is undefined on T.')


class NotEvenPositiveError(DomainError):
    """Raised when halving a term that is odd or zero."""

    kind = 'odd-or-zero'

    def __init__(self) -> None:
        super().__init__('half requires an even positive term.')


class SubtractionUnderflowError(DomainError):
    """Raised when subtracting a larger natural from a smaller one."""

    kind = 'underflow'

    def __init__(self) -> None:
        super().__init__('Subtraction underflow: subtrahend exceeds minuend.')


class DivisionByZeroError(DomainError):
    """Raised on division (or remainder, lcm, rational divide) by zero."""

    kind = 'division-by-zero'

    operation: str

    def __init__(self, operation: str = 'divide') -> None:
        self.operation = operation
        super().__init__(f'Division by zero in {operation}.')


class NegativeNaturalError(DomainError):
    """Raised when a negative integer is converted to a term."""

    kind = 'negative-natural'

    value: int

    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(f'Expected a natural number, got {value}.')


class ShiftBudgetExceededError(DomainError):
    """Raised when converting a term needs a shift larger than the bit budget."""

    kind = 'shift-budget'

    budget: int

    def __init__(self, budget: int) -> None:
        self.budget = budget
        super().__init__(
            f'Term denotes a value with an exponent beyond the shift budget of {budget} bits.',
        )


class UnaryBoundExceededError(DomainError):
    """Raised when a term is too large for the unary representation."""

    kind = 'unary-bound'

    bound: int

    def __init__(self, bound: int) -> None:
        self.bound = bound
        super().__init__(f'Term exceeds the unary conversion bound of {bound}.')


class NonCanonicalPairError(DomainError):
    """Raised when a pair is not co-prime or has a zero component."""

    kind = 'non-canonical-pair'

    def __init__(self, reason: str) -> None:
        super().__init__(f'Expected a co-prime pair of positive terms: {reason}.')


class ZeroComponentError(DomainError):
    """Raised when a fraction component that must be positive is zero."""

    kind = 'zero-component'

    def __init__(self) -> None:
        super().__init__('Fraction components must both be positive.')


class ZeroInverseError(DomainError):
    """Raised when the multiplicative inverse of zero is requested."""

    kind = 'zero-inverse'

    def __init__(self) -> None:
        super().__init__('Zero has no multiplicative inverse.')


class ExponentError(DomainError):
    """Raised when an exponent is negative or not an integer."""

    kind = 'bad-exponent'

    def __init__(self) -> None:
        super().__init__('Exponent must be a non-negative integer.')


class NonIntegerArgumentError(DomainError):
    """Raised when an integer function receives a negative or fractional argument."""

    kind = 'non-integer-argument'

    function: str

    def __init__(self, function: str) -> None:
        self.function = function
        super().__init__(f'{function} expects non-negative integer arguments.')


class TowerHeightError(DomainError):
    """Raised when a tower benchmark height is out of range."""

    kind = 'tower-height'

    height: int

    def __init__(self, height: int, maximum: int) -> None:
        self.height = height
        super().__init__(f'Tower height must be between 1 and {maximum}, got {height}.')


class ExpressionDepthError(DomainError):
    """Raised when an expression is nested too deeply to parse or evaluate."""

    kind = 'expression-too-deep'

    def __init__(self) -> None:
        super().__init__('Expression is nested too deeply.')


class EvaluationError(DomainError):
    """Raised when evaluating an expression node fails.

    Carries the operation that failed, the byte span of the node in the
    source text and the underlying domain error.
    """

    operation: str
    start: int
    end: int
    cause: DomainError

    def __init__(self, *, operation: str, start: int, end: int, cause: DomainError) -> None:
        self.operation = operation
        self.start = start
        self.end = end
        self.cause = cause
        self.kind = cause.kind
        super().__init__(f'{operation} at offset {start}: {cause}')


class TermSyntaxError(SyntaxParseError):
    """Raised when a term string does not follow `T | C(term,term)`."""

    kind = 'term-syntax'


class NaturalSyntaxError(SyntaxParseError):
    """Raised when a decimal natural cannot be parsed."""

    kind = 'natural-syntax'

    def __init__(self, text: str) -> None:
        super().__init__(f'Invalid natural number {text!r}', text=text)


class FractionSyntaxError(SyntaxParseError):
    """Raised when a fraction cannot be parsed."""

    kind = 'fraction-syntax'

    def __init__(self, text: str) -> None:
        super().__init__(f'Invalid fraction {text!r}', text=text)


class ExpressionSyntaxError(SyntaxParseError):
    """Raised when an expression cannot be parsed."""

    kind = 'expression-syntax'

    expected: frozenset[str]

    def __init__(self, *, text: str, offset: int, expected: Iterable[str]) -> None:
        self.expected = frozenset(expected)
        wanted = ', '.join(sorted(self.expected)) or '<nothing>'
        super().__init__(f'Unexpected input; expected one of: {wanted}', text=text, offset=offset)


class CommandUsageError(TreeArithError):
    """Raised when the command line itself is malformed."""

    kind = 'usage'
    exit_code = 2


class ReportWriteError(TreeArithError):
    """Raised when a benchmark report cannot be written."""

    kind = 'report-write'

    path: Path

    def __init__(self, path: Path, reason: str) -> None:
        self.path = path
        super().__init__(f'Cannot write report to {path}: {reason}')

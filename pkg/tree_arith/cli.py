from pathlib import Path
from typing import Annotated, Any, NoReturn

import click
import typer
from pydantic import BaseModel, ValidationError
from typer.core import TyperCommand, TyperGroup

from tree_arith.bench import MAX_TOWER_HEIGHT, TowerReport, bench_tower, format_report, write_report
from tree_arith.bridge import format_nat, from_nat, parse_nat, to_nat
from tree_arith.errors import (
    CommandUsageError,
    EvaluationError,
    ReportWriteError,
    SyntaxParseError,
    TreeArithError,
)
from tree_arith.expr import evaluate, format_expr, parse
from tree_arith.rationals import format_fraction, from_fraq, nat2rat, parse_fraction, rat2nat, to_fraq
from tree_arith.settings import OutputFormat, TreeArithSettings
from tree_arith.terms import format_term, parse_term
from tree_arith.utils import _filter_nulls, _print_error, _print_step

# Arguments such as `-1/2` would otherwise be taken for options.
_NEGATIVE_ARGS = {'ignore_unknown_options': True}


class ErrorInfo(BaseModel):
    kind: str
    message: str
    offset: int | None = None


class CommandResult(BaseModel):
    """The single JSON object printed per command in `--format json` mode."""

    ok: bool
    value: str | TowerReport | None = None
    error: ErrorInfo | None = None


def _error_offset(exc: TreeArithError) -> int | None:
    if isinstance(exc, SyntaxParseError):
        return exc.offset
    if isinstance(exc, EvaluationError):
        return exc.start
    return None


def _emit(settings: TreeArithSettings, value: str | TowerReport, human: str) -> None:
    if settings.json_output:
        typer.echo(CommandResult(ok=True, value=value).model_dump_json())
    else:
        typer.echo(human)


def _fail(settings: TreeArithSettings, exc: TreeArithError) -> NoReturn:
    """Report an error on stderr (and stdout in JSON mode) and exit."""
    if settings.json_output:
        info = ErrorInfo(kind=exc.kind, message=str(exc), offset=_error_offset(exc))
        typer.echo(CommandResult(ok=False, error=info).model_dump_json())
    _print_error(exc.kind, str(exc))
    raise typer.Exit(code=exc.exit_code) from exc


def _usage_error(exc: click.UsageError, parent: click.Context | None) -> NoReturn:
    """Report a malformed command line through `_fail`."""
    try:
        settings = TreeArithSettings.from_context(parent) if parent is not None else TreeArithSettings()
    except ValidationError:
        settings = TreeArithSettings.model_construct()
    _fail(settings, CommandUsageError(exc.format_message()))


class _UsageErrors(click.Command):
    """Turns click's own usage errors into `error: usage:` lines (and JSON results)."""

    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: Any,
    ) -> click.Context:
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            _usage_error(exc, parent)


class _Command(_UsageErrors, TyperCommand):
    pass


class _Group(_UsageErrors, TyperGroup):
    def resolve_command(
        self,
        ctx: click.Context,
        args: list[str],
    ) -> tuple[str | None, click.Command | None, list[str]]:
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as exc:
            _usage_error(exc, ctx)


app = typer.Typer(cls=_Group, help='Exact arithmetic on binary-tree numerals.')


@app.callback()
def _root(
    ctx: typer.Context,
    output_format: Annotated[
        OutputFormat | None,
        typer.Option(
            ...,
            '--format',
            help='Output format: human-readable text or one JSON object per command.',
        ),
    ] = None,
    *,
    verbose: Annotated[
        bool,
        typer.Option(
            ...,
            '--verbose',
            '-v',
            help='Print each step to stderr.',
        ),
    ] = False,
) -> None:
    """tree-arith CLI."""
    ctx.obj = _filter_nulls({'output_format': output_format, 'verbose': verbose or None})


@app.command(name='eval', cls=_Command, context_settings=_NEGATIVE_ARGS)
def eval_(
    ctx: typer.Context,
    expression: Annotated[
        str,
        typer.Argument(
            ...,
            help='Expression over rationals, e.g. "1/2 + 1/3" or "gcd(12, 18)".',
        ),
    ],
) -> None:
    """Evaluate an expression exactly."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        if settings.verbose:
            _print_step(f'parse {expression!r}')
        tree = parse(expression)
        if settings.verbose:
            _print_step(f'evaluate {format_expr(tree)}')
        result = evaluate(tree)
        if result.error is not None:
            raise result.error
        fraction = to_fraq(result.value, shift_budget=settings.shift_bit_budget)
    except TreeArithError as exc:
        _fail(settings, exc)
    _emit(settings, format_fraction(fraction), format_fraction(fraction, machine=False))


@app.command(name='n2t', cls=_Command)
def n2t(
    ctx: typer.Context,
    number: Annotated[str, typer.Argument(..., help='Decimal natural number.')],
) -> None:
    """Convert a natural number to its term."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        n = parse_nat(number)
        if settings.verbose:
            _print_step(f'from_nat {n.bit_length()}-bit natural')
        text = format_term(from_nat(n))
    except TreeArithError as exc:
        _fail(settings, exc)
    _emit(settings, text, text)


@app.command(name='t2n', cls=_Command)
def t2n(
    ctx: typer.Context,
    term: Annotated[str, typer.Argument(..., help='Term in the `T | C(term,term)` format.')],
) -> None:
    """Convert a term to the natural number it denotes."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        t = parse_term(term)
        if settings.verbose:
            _print_step(f'to_nat with a shift budget of {settings.shift_bit_budget} bits')
        text = format_nat(to_nat(t, shift_budget=settings.shift_bit_budget))
    except TreeArithError as exc:
        _fail(settings, exc)
    _emit(settings, text, text)


@app.command(name='cw', cls=_Command)
def cw(
    ctx: typer.Context,
    number: Annotated[str, typer.Argument(..., help='Decimal natural number.')],
) -> None:
    """Print the signed rational at a position of the Calkin-Wilf enumeration."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        n = parse_nat(number)
        if settings.verbose:
            _print_step(f'nat2rat {n}')
        text = format_fraction(to_fraq(nat2rat(n), shift_budget=settings.shift_bit_budget))
    except TreeArithError as exc:
        _fail(settings, exc)
    _emit(settings, text, text)


@app.command(name='cw-inv', cls=_Command, context_settings=_NEGATIVE_ARGS)
def cw_inv(
    ctx: typer.Context,
    fraction: Annotated[str, typer.Argument(..., help='Signed fraction such as -1/2 or 3.')],
) -> None:
    """Print the position of a signed rational in the Calkin-Wilf enumeration."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        f = parse_fraction(fraction)
        if settings.verbose:
            _print_step(f'rat2nat {format_fraction(f)}')
        text = format_nat(rat2nat(from_fraq(f), shift_budget=settings.shift_bit_budget))
    except TreeArithError as exc:
        _fail(settings, exc)
    _emit(settings, text, text)


@app.command(name='bench-tower', cls=_Command)
def bench_tower_(
    ctx: typer.Context,
    height: Annotated[
        int,
        typer.Option(
            ...,
            '--height',
            help=f'Number of twos in the tower 2^2^...^2, from 1 to {MAX_TOWER_HEIGHT}.',
        ),
    ],
    report: Annotated[
        Path | None,
        typer.Option(
            ...,
            '--report',
            help='Also write the report as YAML to this path.',
        ),
    ] = None,
) -> None:
    """Build a tower of exponents with exp2 and time succ/pred on it."""
    settings = TreeArithSettings.from_context(ctx)
    try:
        if settings.verbose:
            _print_step(f'build tower of height {height}')
        result = bench_tower(height, shift_budget=settings.shift_bit_budget)
    except TreeArithError as exc:
        _fail(settings, exc)
    if report is not None:
        if settings.verbose:
            _print_step(f'write {report}')
        try:
            write_report(result, report)
        except OSError as exc:
            _fail(settings, ReportWriteError(report, exc.strerror or str(exc)))
    _emit(settings, result, format_report(result).rstrip('\n'))


def main() -> None:
    """Main entry point for the CLI."""
    app()

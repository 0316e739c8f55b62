from __future__ import annotations

import typing

import pytest
import typer
from pydantic import ValidationError

from tree_arith.bridge import DEFAULT_SHIFT_BUDGET
from tree_arith.settings import OutputFormat, TreeArithSettings

if typing.TYPE_CHECKING:
    from pytest_mock import MockerFixture


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ('OUTPUT_FORMAT', 'VERBOSE', 'SHIFT_BIT_BUDGET'):
        monkeypatch.delenv(f'TREE_ARITH_{name}', raising=False)


def _context(mocker: MockerFixture, obj: dict[str, object] | None) -> typer.Context:
    ctx = mocker.Mock(spec=typer.Context)
    ctx.obj = obj
    return ctx


def test_defaults() -> None:
    settings = TreeArithSettings()

    assert settings.output_format is OutputFormat.HUMAN
    assert settings.verbose is False
    assert settings.shift_bit_budget == DEFAULT_SHIFT_BUDGET
    assert not settings.json_output


def test_environment_variables_use_prefix(monkeypatch: pytest.MonkeyPatch) -> None:
    """`TREE_ARITH_*` variables fill in every field."""
    monkeypatch.setenv('TREE_ARITH_OUTPUT_FORMAT', 'json')
    monkeypatch.setenv('TREE_ARITH_VERBOSE', '1')
    monkeypatch.setenv('TREE_ARITH_SHIFT_BIT_BUDGET', '64')

    settings = TreeArithSettings()

    assert settings.json_output
    assert settings.verbose is True
    assert settings.shift_bit_budget == 64


def test_unprefixed_variables_are_ignored(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv('SHIFT_BIT_BUDGET', '64')

    assert TreeArithSettings().shift_bit_budget == DEFAULT_SHIFT_BUDGET


def test_init_args_beat_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv('TREE_ARITH_OUTPUT_FORMAT', 'json')

    settings = TreeArithSettings(output_format=OutputFormat.HUMAN)

    assert settings.output_format is OutputFormat.HUMAN


@pytest.mark.parametrize(
    'payload',
    [
        {'shift_bit_budget': 0},
        {'shift_bit_budget': -5},
        {'output_format': 'xml'},
        {'colour': True},
    ],
)
def test_validation_rejects(payload: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        TreeArithSettings(**payload)


def test_invalid_environment_value_is_rejected(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv('TREE_ARITH_SHIFT_BIT_BUDGET', 'lots')

    with pytest.raises(ValidationError):
        TreeArithSettings()


# ── from_context ──────────────────────────────────────────────────────────────


def test_from_context_reads_root_options(mocker: MockerFixture) -> None:
    settings = TreeArithSettings.from_context(_context(mocker, {'output_format': OutputFormat.JSON}))

    assert settings.json_output


def test_from_context_without_obj(mocker: MockerFixture) -> None:
    settings = TreeArithSettings.from_context(_context(mocker, None))

    assert settings.output_format is OutputFormat.HUMAN


def test_from_context_ignores_null_overrides(
    mocker: MockerFixture,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """A `None` override leaves the field to the environment."""
    monkeypatch.setenv('TREE_ARITH_SHIFT_BIT_BUDGET', '128')

    settings = TreeArithSettings.from_context(
        _context(mocker, {}),
        shift_bit_budget=None,
        verbose=True,
    )

    assert settings.shift_bit_budget == 128
    assert settings.verbose is True


def test_from_context_overrides_win(mocker: MockerFixture) -> None:
    settings = TreeArithSettings.from_context(
        _context(mocker, {'output_format': OutputFormat.JSON}),
        output_format=OutputFormat.HUMAN,
    )

    assert not settings.json_output

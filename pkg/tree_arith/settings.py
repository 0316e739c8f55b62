from __future__ import annotations

import enum
import typing

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from tree_arith.bridge import DEFAULT_SHIFT_BUDGET
from tree_arith.utils import _filter_nulls

if typing.TYPE_CHECKING:
    import typer


class OutputFormat(enum.StrEnum):
    HUMAN = 'human'
    JSON = 'json'


class TreeArithSettings(BaseSettings):
    """Runtime settings.

    Precedence (highest first):
      1. CLI args (passed to initialization)
      2. Environment variables (with `TREE_ARITH_` prefix)

    There are no configuration files.
    """

    output_format: OutputFormat = OutputFormat.HUMAN
    verbose: bool = False
    shift_bit_budget: int = Field(default=DEFAULT_SHIFT_BUDGET, gt=0)

    model_config = SettingsConfigDict(
        env_prefix='TREE_ARITH_',
        extra='forbid',
    )

    @property
    def json_output(self) -> bool:
        return self.output_format is OutputFormat.JSON

    @classmethod
    def from_context(
        cls,
        ctx: typer.Context,
        **overrides: object,
    ) -> TreeArithSettings:
        """Create settings from a Typer context and optional overrides.

        Args:
            ctx: Typer context containing the root CLI options.
            **overrides: Additional settings to override; `None` values are
                ignored so the environment can fill them in.

        Returns:
            TreeArithSettings instance.
        """
        cli_args = {
            **(ctx.obj or {}),
            **_filter_nulls(overrides),
        }
        return cls(**cli_args)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],  # noqa: ARG003
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,  # noqa: ARG003
        file_secret_settings: PydanticBaseSettingsSource,  # noqa: ARG003
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Only CLI args and environment variables; no dotenv or secret files."""
        return (init_settings, env_settings)

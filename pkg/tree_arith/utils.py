from typing import Any

import typer


def _filter_nulls(d: dict[str, Any]) -> dict[str, Any]:
    """Return a copy of the dictionary with all None values removed.

    Args:
        d: The dictionary to filter.

    Returns:
        A new dictionary with all None values removed.
    """
    return {k: v for k, v in d.items() if v is not None}


def _print_step(message: str) -> None:
    """Print a progress line to stderr.

    Args:
        message: What is about to happen.
    """
    typer.secho(f'▶ {message}', fg=typer.colors.BRIGHT_BLACK, err=True)


def _print_error(kind: str, message: str) -> None:
    """Print an `error:` line to stderr in red.

    Args:
        kind: Stable error kind, e.g. `division-by-zero`.
        message: Human-readable description.
    """
    typer.secho(f'error: {kind}: {message}', fg=typer.colors.RED, err=True)

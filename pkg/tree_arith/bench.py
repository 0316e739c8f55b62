"""Towers of exponents: the case where trees beat bit strings.

A tower of `k` twos has a term with a handful of nodes while its binary
representation has `2**2**...` bits. The benchmark builds the tower with
`exp2`, times `succ` and `pred` on it and, when the value fits in the shift
budget, compares against the bit length of the integer it denotes.
"""

from __future__ import annotations

import time
import typing

import yaml
from pydantic import BaseModel

from tree_arith.arith import exp2
from tree_arith.bridge import DEFAULT_SHIFT_BUDGET, from_nat, to_nat
from tree_arith.errors import ShiftBudgetExceededError, TowerHeightError
from tree_arith.terms import node_count, pred, succ

if typing.TYPE_CHECKING:
    from pathlib import Path

    from tree_arith.terms import Term

MAX_TOWER_HEIGHT = 6


class TowerReport(BaseModel):
    """Outcome of one tower benchmark run.

    Attributes:
        height: Number of twos in the tower.
        node_count: `C` constructors in the term.
        build_seconds: Time to build the term.
        succ_seconds: Time for one `succ`.
        pred_succ_seconds: Time for `pred(succ(x))`.
        oracle_bit_length: Bit length of the denoted integer, if computed.
        notice: Why the oracle comparison was skipped, if it was.
    """

    height: int
    node_count: int
    build_seconds: float
    succ_seconds: float
    pred_succ_seconds: float
    oracle_bit_length: int | None = None
    notice: str | None = None


def build_tower(height: int) -> Term:
    """`2^2^...^2` with `height` twos; height 1 is just 2.

    Raises:
        TowerHeightError: if `height` is outside `1..MAX_TOWER_HEIGHT`.
    """
    if not 1 <= height <= MAX_TOWER_HEIGHT:
        raise TowerHeightError(height, MAX_TOWER_HEIGHT)
    t = from_nat(2)
    for _ in range(height - 1):
        t = exp2(t)
    return t


def bench_tower(height: int, *, shift_budget: int = DEFAULT_SHIFT_BUDGET) -> TowerReport:
    """Build a tower and time `succ` and `pred` on it."""
    start = time.perf_counter()
    tower = build_tower(height)
    build_seconds = time.perf_counter() - start

    start = time.perf_counter()
    succ(tower)
    succ_seconds = time.perf_counter() - start

    start = time.perf_counter()
    pred(succ(tower))
    pred_succ_seconds = time.perf_counter() - start

    oracle_bit_length = None
    notice = None
    try:
        oracle_bit_length = to_nat(tower, shift_budget=shift_budget).bit_length()
    except ShiftBudgetExceededError as exc:
        notice = f'oracle comparison skipped: {exc}'

    return TowerReport(
        height=height,
        node_count=node_count(tower),
        build_seconds=build_seconds,
        succ_seconds=succ_seconds,
        pred_succ_seconds=pred_succ_seconds,
        oracle_bit_length=oracle_bit_length,
        notice=notice,
    )


def format_report(report: TowerReport) -> str:
    """YAML mapping with keys in field order."""
    return yaml.safe_dump(report.model_dump(), default_flow_style=False, sort_keys=False)


def write_report(report: TowerReport, path: Path) -> None:
    """Write the YAML report to `path` (created or overwritten)."""
    path.write_text(format_report(report))


def read_report(path: Path) -> TowerReport:
    return TowerReport.model_validate(yaml.safe_load(path.read_text()))

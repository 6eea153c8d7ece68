"""Rectangular standard Young tableaux and their links to stable outcomes.

A stable outcome of the labeled game is a k x m matrix (rows = branches,
columns = levels), which is literally a tableau filling. For m = 2 the
reachable outcomes are exactly the standard fillings, counted by Catalan
numbers; for larger m every standard filling is still reachable, via an
explicit firing script built here (:func:`witness_sequence`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import (
    BudgetExceededError,
    CENTER,
    ChipGameError,
    Move,
    Outcome,
    StarParams,
    WitnessConstructionError,
    apply_move,
    canonical_outcome,
    initial_labeled,
)
from .engine import expected_total_fires

GENERATION_CELL_BUDGET = 12


@dataclass(frozen=True)
class Tableau:
    """A rectangular filling with the labels 1..k*m, each used once.

    ``is_standard`` holds when rows increase left to right and columns
    increase top to bottom; general fillings are allowed so that arbitrary
    outcomes can be inspected as tableaux.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("tableau must have at least one row and one column")
        m = len(rows[0])
        if any(len(row) != m for row in rows):
            raise ValueError("tableau rows must all have the same length")
        n = len(rows) * m
        entries = {x for row in rows for x in row}
        if entries != set(range(1, n + 1)):
            raise ValueError(f"entries must be a permutation of 1..{n}")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_standard(self) -> bool:
        k, m = self.shape
        rows_ok = all(row[j] < row[j + 1] for row in self.rows for j in range(m - 1))
        cols_ok = all(self.rows[i][j] < self.rows[i + 1][j] for i in range(k - 1) for j in range(m))
        return rows_ok and cols_ok

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def __str__(self) -> str:
        return ",".join("[" + ",".join(map(str, row)) + "]" for row in self.rows)


def from_outcome(outcome: Outcome) -> Tableau:
    """View a stable outcome as a tableau: entry (i, j) is branch i, level j."""
    return Tableau(outcome)


def to_outcome(t: Tableau) -> Outcome:
    """The stable outcome whose branch i, level j holds entry (i, j).

    Defined only for standard tableaux: those are exactly the fillings this
    map sends to reachable outcomes.
    """
    if not t.is_standard:
        raise ValueError(f"tableau {t} is not standard")
    return t.rows


def catalan(k: int) -> int:
    """The k-th Catalan number, binom(2k, k) / (k + 1), exactly."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def count_rect_syt(k: int, m: int) -> int:
    """Number of standard fillings of a k x m rectangle, by the hook length
    formula: (km)! divided by the product of all hook lengths."""
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    hooks = 1
    for i in range(k):
        for j in range(m):
            hooks *= (k - i) + (m - j) - 1
    return math.factorial(k * m) // hooks


def generate_syts(k: int, m: int) -> list[Tableau]:
    """All standard k x m tableaux, in a fixed deterministic order.

    Fills values 1..km in increasing order; a value may extend any row that
    is still shorter than the row above it. Budgeted at k*m <= 12 cells.
    """
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    if k * m > GENERATION_CELL_BUDGET:
        raise BudgetExceededError(
            f"k*m = {k * m} exceeds the generation cell budget of {GENERATION_CELL_BUDGET}"
        )
    results: list[Tableau] = []
    grid = [[0] * m for _ in range(k)]
    filled = [0] * k

    def place(val: int) -> None:
        if val > k * m:
            results.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        for i in range(k):
            if filled[i] < m and (i == 0 or filled[i] < filled[i - 1]):
                grid[i][filled[i]] = val
                filled[i] += 1
                place(val + 1)
                filled[i] -= 1

    place(1)
    return results


def witness_sequence(t: Tableau) -> list[Move]:
    """A legal firing script from the all-on-center start that lands on
    ``to_outcome(t)``.

    The script keeps branch chips inside their own rows: whenever a branch
    vertex holds two chips it is fired (innermost vertices first), and when
    only the center can fire it fires the highest column of the tableau that
    is fully present there. Columns of a standard tableau increase downward,
    so each such center fire routes every chip to its own row's branch.

    The construction is validated by replay; a failure raises
    WitnessConstructionError and indicates a bug, not bad input.
    """
    outcome = to_outcome(t)
    k, m = t.shape
    params = StarParams(k, m)
    columns = [frozenset(t.column(j)) for j in range(m)]
    config = initial_labeled(params)
    moves: list[Move] = []
    cap = expected_total_fires(params)
    while not config.is_stable:
        if len(moves) > cap:
            raise WitnessConstructionError(f"script for {t} exceeded {cap} moves")
        branch_ready = sorted(
            (v for v in config.chips if not v.is_center and len(config.chips[v]) >= 2),
            key=lambda v: (v.level, v.branch),
        )
        if branch_ready:
            v = branch_ready[0]
            chips = config.labels_at(v)
            if len(chips) != 2:
                raise WitnessConstructionError(f"branch vertex {v} holds {sorted(chips)}")
            mv = Move(v, tuple(sorted(chips)))
        else:
            present = config.labels_at(CENTER)
            full = [j for j in range(m) if columns[j] <= present]
            if not full:
                raise WitnessConstructionError(
                    f"center holds {sorted(present)}, no full column of {t}"
                )
            mv = Move(CENTER, tuple(sorted(columns[max(full)])))
        config = apply_move(config, mv)
        moves.append(mv)
    if canonical_outcome(config) != outcome:
        raise WitnessConstructionError(f"script for {t} stabilized elsewhere")
    return moves


def _columns_strictly_increase(grid: tuple[tuple[int, ...], ...]) -> bool:
    k = len(grid)
    return all(grid[i][j] < grid[i + 1][j] for i in range(k - 1) for j in range(len(grid[0])))


def sort_rows(mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort each row of a column-sorted grid; columns stay sorted.

    Requires a rectangular grid of distinct integers whose columns strictly
    increase top to bottom. That the result's columns still increase is a
    classical fact; it is re-checked at runtime as a tripwire.
    """
    grid = tuple(tuple(row) for row in mat)
    if not grid or not grid[0] or any(len(row) != len(grid[0]) for row in grid):
        raise ValueError("grid must be rectangular and non-empty")
    if len({x for row in grid for x in row}) != len(grid) * len(grid[0]):
        raise ValueError("grid entries must be distinct")
    if not _columns_strictly_increase(grid):
        raise ValueError("grid columns must strictly increase top to bottom")
    result = tuple(tuple(sorted(row)) for row in grid)
    if not _columns_strictly_increase(result):
        raise ChipGameError("row sorting broke column order; this cannot happen")
    return result


def is_row_and_rim_sorted(t: Tableau) -> bool:
    """True iff rows strictly increase and so do the first and last columns."""
    k, m = t.shape
    rows_ok = all(row[j] < row[j + 1] for row in t.rows for j in range(m - 1))
    first = t.column(0)
    last = t.column(m - 1)
    rims_ok = all(a < b for a, b in zip(first, first[1:])) and all(
        a < b for a, b in zip(last, last[1:])
    )
    return rows_ok and rims_ok

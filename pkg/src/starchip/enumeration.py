"""Exhaustive search over stabilization sequences of the labeled game.

The move graph from the all-on-center start is finite and graded (every path
from a state to stability has the same length), so sequence counting is a
memoized recursion over states: a stable state counts once for its own
outcome, and any other state sums the counts of all children, one child per
legal move. Counts grow super-exponentially, hence Python's native big
integers throughout.
"""
from __future__ import annotations

import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from .core import (
    BudgetExceededError,
    CENTER,
    LabeledConfig,
    Move,
    Outcome,
    StarParams,
    Vertex,
    apply_move,
    canonical_outcome,
    degree,
    initial_labeled,
    legal_moves,
)
from .engine import expected_total_fires

DEFAULT_CELL_BUDGET = 8
"""Largest k*m enumerated without an explicit state budget."""

VOLMIN_CELL_BUDGET = 9
"""Restricted-tree searches stay tractable a step further than full ones."""


@dataclass(frozen=True)
class EnumerationResult:
    """Per-outcome stabilization-sequence counts for one (k, m)."""

    params: StarParams
    per_outcome: dict[Outcome, int]
    total_sequences: int

    def outcomes(self) -> set[Outcome]:
        return set(self.per_outcome)

    def sorted_items(self) -> list[tuple[Outcome, int]]:
        """Rows ordered by ascending count, then lexicographically."""
        return sorted(self.per_outcome.items(), key=lambda kv: (kv[1], kv[0]))

    def to_json(self) -> str:
        doc = {
            "k": self.params.k,
            "m": self.params.m,
            "outcomes": [
                {"branches": [list(row) for row in outcome], "sequence_count": str(count)}
                for outcome, count in self.sorted_items()
            ],
            "total_sequences": str(self.total_sequences),
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "EnumerationResult":
        doc = json.loads(text)
        per_outcome = {
            tuple(tuple(row) for row in entry["branches"]): int(entry["sequence_count"])
            for entry in doc["outcomes"]
        }
        return cls(StarParams(doc["k"], doc["m"]), per_outcome, int(doc["total_sequences"]))


def _check_budget(params: StarParams, max_states: int | None, default_cells: int) -> None:
    if max_states is None and params.n_chips > default_cells:
        raise BudgetExceededError(
            f"k*m = {params.n_chips} exceeds the default cell budget of {default_cells}; "
            "pass max_states to override"
        )
    if max_states is not None and max_states < 1:
        raise ValueError("max_states must be >= 1")


def _bump_recursion_limit(params: StarParams) -> None:
    need = expected_total_fires(params) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def enumerate_all(params: StarParams, max_states: int | None = None) -> EnumerationResult:
    """Count every stabilization sequence from the all-on-center start.

    Two sequences are distinct when they differ in any move, where a move is
    a vertex plus the exact chip subset fired. Memoization is keyed on the
    canonical configuration, so the cost scales with distinct states rather
    than with the (much larger) number of sequences.

    Raises BudgetExceededError when k*m exceeds the default cell budget and
    no explicit ``max_states`` is given, or when the state count passes
    ``max_states``.
    """
    _check_budget(params, max_states, DEFAULT_CELL_BUDGET)
    _bump_recursion_limit(params)
    memo: dict[tuple, Counter[Outcome]] = {}

    def count(config: LabeledConfig) -> Counter[Outcome]:
        key = config.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        moves = legal_moves(config)
        if not moves:
            tallies = Counter({canonical_outcome(config): 1})
        else:
            tallies = Counter()
            for mv in moves:
                for outcome, n in count(apply_move(config, mv)).items():
                    tallies[outcome] += n
        if max_states is not None and len(memo) >= max_states:
            raise BudgetExceededError(f"state count exceeded max_states = {max_states}")
        memo[key] = tallies
        return tallies

    per_outcome = dict(count(initial_labeled(params)))
    return EnumerationResult(params, per_outcome, sum(per_outcome.values()))


def _search_outcomes(
    params: StarParams,
    successors: Callable[[LabeledConfig], list[Move]],
    max_states: int | None,
) -> set[Outcome]:
    """Depth-first reachability over the move graph, collecting stable outcomes."""
    start = initial_labeled(params)
    seen = {start.key()}
    outcomes: set[Outcome] = set()
    stack = [start]
    while stack:
        config = stack.pop()
        moves = successors(config)
        if not moves:
            outcomes.add(canonical_outcome(config))
            continue
        for mv in moves:
            child = apply_move(config, mv)
            key = child.key()
            if key not in seen:
                if max_states is not None and len(seen) >= max_states:
                    raise BudgetExceededError(f"state count exceeded max_states = {max_states}")
                seen.add(key)
                stack.append(child)
    return outcomes


def reachable_set(params: StarParams, max_states: int | None = None) -> set[Outcome]:
    """All stable outcomes reachable from the all-on-center start."""
    _check_budget(params, max_states, DEFAULT_CELL_BUDGET)
    return _search_outcomes(params, legal_moves, max_states)


def volmin_allowed_moves(config: LabeledConfig) -> list[Move]:
    """Legal moves surviving the volatility-minimizing filter.

    A vertex survives when firing it leaves the fewest ready-to-fire vertices
    (this depends only on chip counts, not on which chips fire); among the
    survivors only those furthest from the center are kept. All chip-subset
    choices at the surviving vertices are returned, in canonical order.
    """
    params = config.params
    counts = {v: len(s) for v, s in config.chips.items()}
    fireable = [v for v in sorted(counts) if counts[v] >= degree(params, v)]
    if not fireable:
        return []

    def volatility_after(v: Vertex) -> int:
        after = dict(counts)
        d = degree(params, v)
        after[v] -= d
        if v.is_center:
            receivers: Iterable[Vertex] = (Vertex(i, 1) for i in range(1, params.k + 1))
        else:
            receivers = (
                CENTER if v.level == 1 else Vertex(v.branch, v.level - 1),
                Vertex(v.branch, v.level + 1),
            )
        for u in receivers:
            after[u] = after.get(u, 0) + 1
        return sum(1 for u, c in after.items() if c >= degree(params, u))

    scores = {v: volatility_after(v) for v in fireable}
    best = min(scores.values())
    calmest = [v for v in fireable if scores[v] == best]
    top_level = max(v.level for v in calmest)
    survivors = [v for v in calmest if v.level == top_level]

    all_moves = legal_moves(config)
    keep = set(survivors)
    return [mv for mv in all_moves if mv.vertex in keep]


def enumerate_volmin(params: StarParams, max_states: int | None = None) -> set[Outcome]:
    """Outcomes reachable when every fire must be volatility-minimizing.

    Branches over all surviving vertices and chip choices; the filter only
    prunes the tree, so the result is a subset of :func:`reachable_set`.
    """
    _check_budget(params, max_states, VOLMIN_CELL_BUDGET)
    return _search_outcomes(params, volmin_allowed_moves, max_states)

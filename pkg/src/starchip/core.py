"""Core state model for chip-firing on a subdivided star graph.

The board is a "star" of k half-infinite paths (branches) glued at a single
center vertex. Branch vertices are addressed by (branch, level) with level 1
adjacent to the center; the center has degree k, every branch vertex degree 2.

Two games live on this board:

* unlabeled: a vertex holding at least degree-many chips may fire, sending
  one chip to each neighbor;
* labeled: chips carry distinct labels 1..N. A center fire picks k chips and
  routes the i-th smallest to branch i. A branch fire picks 2 chips and sends
  the smaller toward the center, the larger outward.

Configurations are immutable values; firing produces a fresh configuration.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple

Outcome = tuple[tuple[int, ...], ...]
"""Stable result of the labeled game: row i holds branch i's labels, center-outward."""


class ChipGameError(Exception):
    """Base class for all errors raised by this package."""


class IllegalMoveError(ChipGameError):
    """A move whose fired chips are not available (or wrongly sized) at its vertex."""

    def __init__(self, vertex: "Vertex", chips: tuple[int, ...], reason: str, step: int | None = None):
        self.vertex = vertex
        self.chips = chips
        self.reason = reason
        self.step = step
        at = f" at step {step}" if step is not None else ""
        super().__init__(f"illegal move {Move(vertex, chips)}{at}: {reason}")


class ShapeError(ChipGameError):
    """A configuration does not have the one-chip-per-filled-vertex stable shape."""


class BudgetExceededError(ChipGameError):
    """A search or generation task exceeded its configured resource budget."""


class LogInconsistencyError(ChipGameError):
    """A move log's per-vertex fire counts contradict the closed-form counts."""


class WitnessConstructionError(ChipGameError):
    """Internal failure while building a scripted firing sequence (indicates a bug)."""


class Vertex(NamedTuple):
    """Address of a star vertex. The center is ``Vertex(0, 0)``; branch vertices
    have branch >= 1 and level >= 1. Tuple ordering gives the canonical vertex
    order (center first, then by branch and level)."""

    branch: int
    level: int

    @property
    def is_center(self) -> bool:
        return self.level == 0

    def __str__(self) -> str:
        return "C" if self.is_center else f"B({self.branch},{self.level})"


CENTER = Vertex(0, 0)

_VERTEX_RE = re.compile(r"^(?:C|B\((\d+),(\d+)\))$")


def branch_vertex(branch: int, level: int) -> Vertex:
    if branch < 1 or level < 1:
        raise ValueError(f"branch vertex needs branch >= 1 and level >= 1, got ({branch},{level})")
    return Vertex(branch, level)


def parse_vertex(text: str) -> Vertex:
    m = _VERTEX_RE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse vertex {text!r}")
    if m.group(1) is None:
        return CENTER
    return branch_vertex(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class StarParams:
    """Game parameters: k branches, m target levels per branch.

    The labeled game always starts with n_chips = k*m labels on the center;
    the unlabeled game accepts any starting pile.
    """

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 1:
            raise ValueError(f"need k >= 1 and m >= 1, got k={self.k}, m={self.m}")

    @property
    def n_chips(self) -> int:
        return self.k * self.m


def degree(params: StarParams, v: Vertex) -> int:
    """Vertex degree: k at the center, 2 on every branch vertex."""
    check_vertex(params, v)
    return params.k if v.is_center else 2


def check_vertex(params: StarParams, v: Vertex) -> None:
    if v.is_center:
        if v != CENTER:
            raise ValueError(f"malformed center vertex {v!r}")
        return
    if not (1 <= v.branch <= params.k) or v.level < 1:
        raise ValueError(f"vertex {v} is not on a star with k={params.k}")


class Move(NamedTuple):
    """One firing event: a vertex together with the exact chips fired.

    ``chips`` is sorted and has size degree(vertex). Two moves are equal iff
    both the vertex and the chip set agree; sequence counting works at this
    granularity.
    """

    vertex: Vertex
    chips: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.vertex}:{{{','.join(map(str, self.chips))}}}"


_MOVE_RE = re.compile(r"^(C|B\(\d+,\d+\)):\{([\d,\s]*)\}$")


def parse_move(text: str) -> Move:
    m = _MOVE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse move {text!r}")
    vertex = parse_vertex(m.group(1))
    chips = tuple(sorted(int(t) for t in m.group(2).replace(" ", "").split(",") if t))
    return Move(vertex, chips)


class UnlabeledConfig:
    """Sparse chip-count configuration: vertices absent from ``counts`` hold zero."""

    __slots__ = ("params", "counts", "_key")

    def __init__(self, params: StarParams, counts: Mapping[Vertex, int]):
        clean: dict[Vertex, int] = {}
        for v, c in counts.items():
            check_vertex(params, v)
            if c < 0:
                raise ValueError(f"negative chip count {c} at {v}")
            if c > 0:
                clean[v] = c
        self.params = params
        self.counts = clean
        self._key = tuple(sorted(clean.items()))

    def count_at(self, v: Vertex) -> int:
        return self.counts.get(v, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def is_stable(self) -> bool:
        return not any(True for _ in self.fireable_vertices())

    def fireable_vertices(self) -> Iterator[Vertex]:
        for v in sorted(self.counts):
            if self.counts[v] >= degree(self.params, v):
                yield v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UnlabeledConfig) and self.params == other.params and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.params, self._key))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}:{c}" for v, c in self._key)
        return f"UnlabeledConfig({inner})"


class LabeledConfig:
    """Assignment of the labels 1..N to star vertices (sparse; N = k*m).

    The label sets over all vertices always partition {1, .., N}: no label is
    duplicated or missing. Values are immutable; use :func:`apply_move`.
    """

    __slots__ = ("params", "chips", "_key")

    def __init__(self, params: StarParams, chips: Mapping[Vertex, Iterable[int]]):
        clean: dict[Vertex, frozenset[int]] = {}
        seen: set[int] = set()
        total = 0
        for v, labels in chips.items():
            check_vertex(params, v)
            s = frozenset(labels)
            if not s:
                continue
            total += len(s)
            seen.update(s)
            clean[v] = s
        n = params.n_chips
        if total != n or len(seen) != n or not all(1 <= c <= n for c in seen):
            raise ValueError(f"labels must partition 1..{n} exactly")
        self.params = params
        self.chips = clean
        self._key = tuple(sorted((v, tuple(sorted(s))) for v, s in clean.items()))

    def labels_at(self, v: Vertex) -> frozenset[int]:
        return self.chips.get(v, frozenset())

    def count_at(self, v: Vertex) -> int:
        return len(self.chips.get(v, ()))

    @property
    def is_stable(self) -> bool:
        return not any(True for _ in self.fireable_vertices())

    def fireable_vertices(self) -> Iterator[Vertex]:
        for v in sorted(self.chips):
            if len(self.chips[v]) >= degree(self.params, v):
                yield v

    def to_unlabeled(self) -> UnlabeledConfig:
        """Forget the labels, keeping chip counts."""
        return UnlabeledConfig(self.params, {v: len(s) for v, s in self.chips.items()})

    def key(self) -> tuple:
        """Canonical hashable form: sorted (vertex, sorted labels) pairs."""
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabeledConfig) and self.params == other.params and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.params, self._key))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}:{{{','.join(map(str, s))}}}" for v, s in self._key)
        return f"LabeledConfig({inner})"


def initial_labeled(params: StarParams) -> LabeledConfig:
    """All labels 1..k*m stacked on the center: the labeled game's start."""
    return LabeledConfig(params, {CENTER: range(1, params.n_chips + 1)})


def initial_unlabeled(params: StarParams, n: int) -> UnlabeledConfig:
    """n unlabeled chips on the center, nothing elsewhere."""
    if n < 0:
        raise ValueError(f"chip count must be >= 0, got {n}")
    return UnlabeledConfig(params, {CENTER: n} if n else {})


def is_stable(config: LabeledConfig | UnlabeledConfig) -> bool:
    return config.is_stable


def legal_moves(config: LabeledConfig) -> list[Move]:
    """All legal single fires, in canonical order.

    Vertices come center-first then by (branch, level); each vertex
    contributes every size-degree subset of its chips in lexicographic order
    of the sorted labels. Empty exactly when the configuration is stable.
    """
    moves: list[Move] = []
    for v in config.fireable_vertices():
        d = degree(config.params, v)
        for chips in combinations(sorted(config.chips[v]), d):
            moves.append(Move(v, chips))
    return moves


def apply_move(config: LabeledConfig, move: Move) -> LabeledConfig:
    """Fire one vertex, returning the new configuration.

    Center fire: the i-th smallest fired label lands on branch i, level 1.
    Branch fire at (i, j) with labels a < b: a moves inward (center when
    j = 1), b moves outward to level j + 1.

    Raises IllegalMoveError if the move is not legal here.
    """
    v, fired = move
    params = config.params
    check_vertex(params, v)
    have = config.labels_at(v)
    d = degree(params, v)
    if len(fired) != d:
        raise IllegalMoveError(v, fired, f"must fire exactly {d} chips")
    if tuple(sorted(fired)) != fired or len(set(fired)) != d:
        raise IllegalMoveError(v, fired, "chips must be distinct and sorted")
    if not set(fired) <= have:
        raise IllegalMoveError(v, fired, f"chips not present (vertex holds {sorted(have)})")

    new: dict[Vertex, frozenset[int]] = dict(config.chips)
    remaining = have.difference(fired)
    if remaining:
        new[v] = remaining
    else:
        del new[v]

    def add(u: Vertex, label: int) -> None:
        new[u] = new.get(u, frozenset()) | {label}

    if v.is_center:
        for i, label in enumerate(fired, start=1):
            add(Vertex(i, 1), label)
    else:
        a, b = fired
        add(CENTER if v.level == 1 else Vertex(v.branch, v.level - 1), a)
        add(Vertex(v.branch, v.level + 1), b)
    return LabeledConfig(params, new)


def canonical_outcome(config: LabeledConfig) -> Outcome:
    """Read a stabilized configuration off as a k x m label matrix.

    Requires exactly one chip on each of the first m vertices of every branch
    and nothing anywhere else, which is the only stable shape reachable from
    the all-on-center start. Anything else raises ShapeError.
    """
    params = config.params
    if not config.is_stable:
        raise ShapeError("configuration is not stable")
    expected = {Vertex(i, j) for i in range(1, params.k + 1) for j in range(1, params.m + 1)}
    if set(config.chips) != expected or any(len(s) != 1 for s in config.chips.values()):
        raise ShapeError(
            f"stable configuration does not fill exactly levels 1..{params.m} of each branch"
        )
    return tuple(
        tuple(next(iter(config.chips[Vertex(i, j)])) for j in range(1, params.m + 1))
        for i in range(1, params.k + 1)
    )


def outcome_to_text(outcome: Outcome) -> str:
    """Bracket notation, branches center-outward: ``[1,3],[2,4]``."""
    return ",".join("[" + ",".join(map(str, row)) + "]" for row in outcome)


def outcome_from_text(text: str) -> Outcome:
    rows = re.findall(r"\[([\d,\s]*)\]", text)
    if not rows:
        raise ValueError(f"cannot parse outcome {text!r}")
    return tuple(tuple(int(t) for t in row.replace(" ", "").split(",") if t) for row in rows)


def totally_sorted_outcome(params: StarParams) -> Outcome:
    """The outcome where branch i holds labels (i-1)*m+1 .. i*m in order."""
    m = params.m
    return tuple(tuple(range((i - 1) * m + 1, i * m + 1)) for i in range(1, params.k + 1))


def is_totally_sorted(outcome: Outcome) -> bool:
    m = len(outcome[0])
    return all(row == tuple(range((i - 1) * m + 1, i * m + 1)) for i, row in enumerate(outcome, start=1))

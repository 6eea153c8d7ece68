"""Checks that recorded stabilization sequences obey the known structure.

Near the end of every stabilization sequence from the all-on-center start,
each firing vertex performs its "endgame" fires: the final m-j fires of a
level-j vertex (the center counts as level 0). These are partially ordered:

* the fire one step further out with the same countdown index, and the fire
  one step further in with countdown index one higher, must both happen
  first ("outer-precedes", "inner-refire-precedes");
* each of the center's endgame fires happens only after every branch's
  level-1 fire with the same countdown index ("branch-precedes-center",
  skipped at the earliest countdown index);
* every endgame fire happens with exactly degree-many chips present
  ("exact-degree-chips").

A separate check watches what the center's endgame fires send outward: for a
fixed branch, consecutive sends never increase. (They can repeat: a level-1
vertex may bounce the same chip back to the center, which then returns it.)

Stable outcomes themselves are checked for the two sorting guarantees:
rows sorted along each branch, and the innermost/outermost rings sorted
across branches.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    IllegalMoveError,
    LogInconsistencyError,
    Outcome,
    StarParams,
    Vertex,
    CENTER,
    apply_move,
    degree,
    initial_labeled,
)
from .engine import SequenceLog, expected_fire_count


class FireRef(NamedTuple):
    """A vertex fire addressed from the end: from_end = 0 is the vertex's last fire."""

    vertex: Vertex
    from_end: int


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: tuple
    detail: str


@dataclass(frozen=True)
class VerifierReport:
    passed: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def to_json(self) -> str:
        doc = {
            "passed": self.passed,
            "violations": [{"rule": v.rule, "detail": v.detail} for v in self.violations],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerifierReport":
        doc = json.loads(text)
        violations = tuple(Violation(v["rule"], (), v["detail"]) for v in doc["violations"])
        return cls(doc["passed"], violations)


def _report(violations: list[Violation]) -> VerifierReport:
    return VerifierReport(passed=not violations, violations=tuple(violations))


def endgame_refs(params: StarParams) -> list[FireRef]:
    """Every endgame fire of a full stabilization: level j contributes its
    last m-j fires, for j in [0, m-1]."""
    m = params.m
    refs = [FireRef(CENTER, f) for f in range(m)]
    for i in range(1, params.k + 1):
        for j in range(1, m):
            refs.extend(FireRef(Vertex(i, j), f) for f in range(m - j))
    return refs


def is_endgame(params: StarParams, ref: FireRef) -> bool:
    return ref.from_end <= params.m - ref.vertex.level - 1


def _check_counts(log: SequenceLog) -> dict[Vertex, list[int]]:
    """Positions of each vertex's fires, after checking the closed-form counts."""
    params = log.params
    occurrences: dict[Vertex, list[int]] = {}
    for t, mv in enumerate(log.moves):
        occurrences.setdefault(mv.vertex, []).append(t)
    expected = {
        v: expected_fire_count(params, v)
        for v in [CENTER] + [Vertex(i, j) for i in range(1, params.k + 1) for j in range(1, params.m)]
    }
    actual = {v: len(ts) for v, ts in occurrences.items()}
    wanted = {v: c for v, c in expected.items() if c > 0}
    if actual != wanted:
        raise LogInconsistencyError(
            f"per-vertex fire counts {actual} disagree with the closed form {wanted}"
        )
    return occurrences


def endgame_positions(log: SequenceLog) -> dict[FireRef, int]:
    """Map each endgame fire to its 0-based index in the move list.

    Raises LogInconsistencyError if the log's per-vertex fire counts do not
    match the closed-form counts of a complete stabilization.
    """
    occurrences = _check_counts(log)
    positions: dict[FireRef, int] = {}
    for ref in endgame_refs(log.params):
        ts = occurrences[ref.vertex]
        positions[ref] = ts[len(ts) - 1 - ref.from_end]
    return positions


def verify_poset(log: SequenceLog) -> VerifierReport:
    """Check the endgame-fire ordering and exact-chip conditions on one log.

    All findings are reported, none raised: a log that cannot even be
    replayed yields an ``illegal-replay`` violation.
    """
    params = log.params
    violations: list[Violation] = []
    try:
        positions = endgame_positions(log)
    except LogInconsistencyError as e:
        return _report([Violation("fire-count-mismatch", (), str(e))])

    def require_before(earlier: FireRef, later: FireRef, rule: str) -> None:
        if positions[earlier] >= positions[later]:
            violations.append(
                Violation(
                    rule,
                    (earlier, later),
                    f"{earlier.vertex}^{earlier.from_end} at index {positions[earlier]} "
                    f"must precede {later.vertex}^{later.from_end} at index {positions[later]}",
                )
            )

    m = params.m
    for ref in endgame_refs(params):
        v, f = ref
        if v.is_center:
            if f < m - 1:
                for i in range(1, params.k + 1):
                    require_before(FireRef(Vertex(i, 1), f), ref, "branch-precedes-center")
        else:
            inner = CENTER if v.level == 1 else Vertex(v.branch, v.level - 1)
            require_before(FireRef(inner, f + 1), ref, "inner-refire-precedes")
            outer_ref = FireRef(Vertex(v.branch, v.level + 1), f)
            if is_endgame(params, outer_ref):
                require_before(outer_ref, ref, "outer-precedes")

    endgame_at = {t: ref for ref, t in positions.items()}
    config = initial_labeled(params)
    for t, mv in enumerate(log.moves):
        ref = endgame_at.get(t)
        if ref is not None and config.count_at(mv.vertex) != degree(params, mv.vertex):
            violations.append(
                Violation(
                    "exact-degree-chips",
                    (ref,),
                    f"endgame fire {mv.vertex}^{ref.from_end} at index {t} ran with "
                    f"{config.count_at(mv.vertex)} chips present, not {degree(params, mv.vertex)}",
                )
            )
        try:
            config = apply_move(config, mv)
        except IllegalMoveError as e:
            violations.append(Violation("illegal-replay", (t,), str(e)))
            break
    return _report(violations)


def verify_mixing(log: SequenceLog, strict: bool = False) -> VerifierReport:
    """Check chips sent outward by the center's endgame fires, per branch.

    For each branch the sequence of chips sent by successive endgame center
    fires must never increase. With ``strict=True``, repeats are flagged as
    well; repeats do occur in real play (a branch can return the chip it was
    just sent), so the strict mode is diagnostic rather than an invariant.
    """
    params = log.params
    violations: list[Violation] = []
    center_fires = log.positions_of(CENTER)
    endgame_fires = center_fires[-params.m:]
    previous: tuple[int, ...] | None = None
    prev_t = None
    for t in endgame_fires:
        sent = log.moves[t].chips
        if previous is not None:
            for i in range(params.k):
                if sent[i] > previous[i]:
                    violations.append(
                        Violation(
                            "center-send-increased",
                            (prev_t, t, i + 1),
                            f"center fire at index {t} sent chip {sent[i]} to branch {i + 1}, "
                            f"larger than {previous[i]} sent at index {prev_t}",
                        )
                    )
                elif strict and sent[i] == previous[i]:
                    violations.append(
                        Violation(
                            "center-send-repeated",
                            (prev_t, t, i + 1),
                            f"center fires at indices {prev_t} and {t} both sent chip "
                            f"{sent[i]} to branch {i + 1}",
                        )
                    )
        previous = sent
        prev_t = t
    return _report(violations)


def verify_branch_sorted(outcome: Outcome) -> bool:
    """True iff every branch reads strictly increasing from the center outward."""
    return all(all(row[j] < row[j + 1] for j in range(len(row) - 1)) for row in outcome)


def verify_rim_sorted(outcome: Outcome) -> bool:
    """True iff the innermost and outermost chips are sorted across branches."""
    inner = [row[0] for row in outcome]
    outer = [row[-1] for row in outcome]
    return all(a < b for a, b in zip(inner, inner[1:])) and all(
        a < b for a, b in zip(outer, outer[1:])
    )

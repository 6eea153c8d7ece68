"""Random-play frequency experiments and table/JSON emitters.

Sequence counts and random-play frequencies measure different things: random
play does not pick stabilization sequences uniformly, so a popular outcome by
sequence count need not be the most frequent under random play. Reports keep
the two side by side where useful and annotate two observations worth
watching: whether the totally sorted outcome is the mode, and whether every
standard-tableau outcome out-frequents every non-standard one.
"""
from __future__ import annotations

import json
import os
import tempfile
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .core import Outcome, StarParams, initial_labeled, is_totally_sorted, outcome_to_text
from .engine import RandomUniform, stabilize_labeled
from .enumeration import EnumerationResult
from .rng import derive_seed
from .tableaux import from_outcome


class OutcomeStats(NamedTuple):
    hits: int
    is_syt: bool
    is_totally_sorted: bool


@dataclass(frozen=True)
class FrequencyReport:
    """Outcome tallies over independent seeded random-play stabilizations."""

    params: StarParams
    trials: int
    seed: int
    per_outcome: dict[Outcome, OutcomeStats]

    def sorted_items(self) -> list[tuple[Outcome, OutcomeStats]]:
        """Most frequent first; ties broken lexicographically."""
        return sorted(self.per_outcome.items(), key=lambda kv: (-kv[1].hits, kv[0]))

    def mode_outcomes(self) -> list[Outcome]:
        top = max(stats.hits for stats in self.per_outcome.values())
        return sorted(o for o, stats in self.per_outcome.items() if stats.hits == top)

    @property
    def totally_sorted_is_mode(self) -> bool:
        return any(is_totally_sorted(o) for o in self.mode_outcomes())

    @property
    def syt_outcomes_dominate(self) -> bool:
        """True iff every observed standard-tableau outcome out-frequents every
        observed non-standard outcome (vacuously true if either side is empty)."""
        syt_hits = [s.hits for s in self.per_outcome.values() if s.is_syt]
        other_hits = [s.hits for s in self.per_outcome.values() if not s.is_syt]
        if not syt_hits or not other_hits:
            return True
        return min(syt_hits) > max(other_hits)

    def to_json(self) -> str:
        doc = {
            "k": self.params.k,
            "m": self.params.m,
            "trials": self.trials,
            "seed": self.seed,
            "outcomes": [
                {
                    "branches": [list(row) for row in outcome],
                    "hits": stats.hits,
                    "is_syt": stats.is_syt,
                    "is_totally_sorted": stats.is_totally_sorted,
                }
                for outcome, stats in self.sorted_items()
            ],
            "totally_sorted_is_mode": self.totally_sorted_is_mode,
            "syt_outcomes_dominate": self.syt_outcomes_dominate,
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FrequencyReport":
        doc = json.loads(text)
        per_outcome = {
            tuple(tuple(row) for row in entry["branches"]): OutcomeStats(
                entry["hits"], entry["is_syt"], entry["is_totally_sorted"]
            )
            for entry in doc["outcomes"]
        }
        return cls(StarParams(doc["k"], doc["m"]), doc["trials"], doc["seed"], per_outcome)


def run_montecarlo(params: StarParams, trials: int, seed: int) -> FrequencyReport:
    """Tally outcomes of ``trials`` independent random-play stabilizations.

    Trial i uses a child seed derived from (seed, i), so the report depends
    only on (params, trials, seed) and trials could run in any order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tally: Counter[Outcome] = Counter()
    for i in range(trials):
        strategy = RandomUniform(derive_seed(seed, i))
        outcome, _ = stabilize_labeled(initial_labeled(params), strategy)
        tally[outcome] += 1
    per_outcome = {
        o: OutcomeStats(hits, from_outcome(o).is_standard, is_totally_sorted(o))
        for o, hits in tally.items()
    }
    return FrequencyReport(params, trials, seed, per_outcome)


def _enumeration_table(result: EnumerationResult) -> str:
    params = result.params
    lines = [f"stabilization sequence counts for k={params.k}, m={params.m}"]
    for outcome, count in result.sorted_items():
        flag = " | totally-sorted" if is_totally_sorted(outcome) else ""
        lines.append(f"{outcome_to_text(outcome)} | {count}{flag}")
    lines.append(f"total | {result.total_sequences}")
    return "\n".join(lines) + "\n"


def _frequency_table(report: FrequencyReport) -> str:
    params = report.params
    lines = [
        f"random-play outcome frequencies for k={params.k}, m={params.m} "
        f"(trials={report.trials}, seed={report.seed})"
    ]
    for outcome, stats in report.sorted_items():
        tags = ["syt" if stats.is_syt else "non-syt"]
        if stats.is_totally_sorted:
            tags.append("totally-sorted")
        lines.append(f"{outcome_to_text(outcome)} | {stats.hits} | {' | '.join(tags)}")
    lines.append(f"totally sorted outcome is the mode: {'yes' if report.totally_sorted_is_mode else 'no'}")
    lines.append(
        "syt outcomes out-frequent non-syt outcomes: "
        f"{'yes' if report.syt_outcomes_dominate else 'no'}"
    )
    return "\n".join(lines) + "\n"


def emit_table(result: EnumerationResult | FrequencyReport, format: str = "text") -> str:
    """Render a result as a text table or as its JSON document."""
    if format == "json":
        return result.to_json() + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}; expected 'text' or 'json'")
    if isinstance(result, EnumerationResult):
        return _enumeration_table(result)
    return _frequency_table(result)


def write_atomic(path: str, text: str) -> None:
    """Write UTF-8 text via a temp file and rename, so readers never see a
    partially written file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

"""Labeled chip-firing on infinitely subdivided star graphs.

Simulation, exhaustive enumeration, and verification of the labeled and
unlabeled chip-firing games started from a pile of chips on the center of a
k-branch star, including the standard-Young-tableau structure of the stable
outcomes.
"""
from .core import (
    BudgetExceededError,
    CENTER,
    ChipGameError,
    IllegalMoveError,
    LabeledConfig,
    LogInconsistencyError,
    Move,
    Outcome,
    ShapeError,
    StarParams,
    UnlabeledConfig,
    Vertex,
    WitnessConstructionError,
    apply_move,
    branch_vertex,
    canonical_outcome,
    degree,
    initial_labeled,
    initial_unlabeled,
    is_stable,
    is_totally_sorted,
    legal_moves,
    outcome_from_text,
    outcome_to_text,
    parse_move,
    parse_vertex,
    totally_sorted_outcome,
)
from .engine import (
    Deterministic,
    RandomUniform,
    SequenceLog,
    VolatilityMinimizing,
    expected_fire_count,
    expected_total_fires,
    make_strategy,
    replay,
    stabilize_labeled,
    stabilize_unlabeled,
)
from .enumeration import (
    DEFAULT_CELL_BUDGET,
    EnumerationResult,
    enumerate_all,
    enumerate_volmin,
    reachable_set,
    volmin_allowed_moves,
)
from .rng import SplitMix64, derive_seed
from .tableaux import (
    Tableau,
    catalan,
    count_rect_syt,
    from_outcome,
    generate_syts,
    is_row_and_rim_sorted,
    sort_rows,
    to_outcome,
    witness_sequence,
)
from .verify import (
    FireRef,
    VerifierReport,
    Violation,
    endgame_positions,
    endgame_refs,
    verify_branch_sorted,
    verify_mixing,
    verify_poset,
    verify_rim_sorted,
)
from .reports import FrequencyReport, OutcomeStats, emit_table, run_montecarlo, write_atomic

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CENTER",
    "ChipGameError",
    "DEFAULT_CELL_BUDGET",
    "Deterministic",
    "EnumerationResult",
    "FireRef",
    "FrequencyReport",
    "IllegalMoveError",
    "LabeledConfig",
    "LogInconsistencyError",
    "Move",
    "Outcome",
    "OutcomeStats",
    "RandomUniform",
    "SequenceLog",
    "ShapeError",
    "SplitMix64",
    "StarParams",
    "Tableau",
    "UnlabeledConfig",
    "VerifierReport",
    "Vertex",
    "Violation",
    "VolatilityMinimizing",
    "WitnessConstructionError",
    "apply_move",
    "branch_vertex",
    "canonical_outcome",
    "catalan",
    "count_rect_syt",
    "degree",
    "derive_seed",
    "emit_table",
    "endgame_positions",
    "endgame_refs",
    "enumerate_all",
    "enumerate_volmin",
    "expected_fire_count",
    "expected_total_fires",
    "from_outcome",
    "generate_syts",
    "initial_labeled",
    "initial_unlabeled",
    "is_row_and_rim_sorted",
    "is_stable",
    "is_totally_sorted",
    "legal_moves",
    "make_strategy",
    "outcome_from_text",
    "outcome_to_text",
    "parse_move",
    "parse_vertex",
    "reachable_set",
    "replay",
    "run_montecarlo",
    "sort_rows",
    "stabilize_labeled",
    "stabilize_unlabeled",
    "to_outcome",
    "totally_sorted_outcome",
    "verify_branch_sorted",
    "verify_mixing",
    "verify_poset",
    "verify_rim_sorted",
    "volmin_allowed_moves",
    "witness_sequence",
    "write_atomic",
]

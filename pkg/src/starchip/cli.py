"""Command-line interface.

Subcommands:
  stabilize   play one game to stability under a chosen strategy
  enumerate   count all stabilization sequences per reachable outcome
  volmin      outcomes under volatility-minimizing play, vs. the SYT image
  syt         count/list standard tableaux; optionally replay witness scripts
  montecarlo  seeded random-play frequency experiment
  verify      run seeded random games through every sequence/outcome check

Exit codes: 0 on success, 1 when a requested verification fails, 2 on
argument or budget errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import (
    ChipGameError,
    StarParams,
    initial_labeled,
    outcome_to_text,
)
from .engine import expected_total_fires, make_strategy, stabilize_labeled, RandomUniform
from .enumeration import DEFAULT_CELL_BUDGET, enumerate_all, enumerate_volmin, reachable_set
from .reports import emit_table, run_montecarlo, write_atomic
from .rng import derive_seed
from .tableaux import count_rect_syt, generate_syts, to_outcome, witness_sequence
from .verify import verify_branch_sorted, verify_mixing, verify_poset, verify_rim_sorted
from . import engine


def _add_km(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="number of branches (>= 1)")
    parser.add_argument("--m", type=int, required=True, help="levels filled per branch (>= 1)")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


def cmd_stabilize(args: argparse.Namespace) -> int:
    params = StarParams(args.k, args.m)
    strategy = make_strategy(args.strategy, args.seed)
    outcome, log = stabilize_labeled(initial_labeled(params), strategy)
    checks: dict[str, bool] = {}
    if args.verify:
        checks = {
            "poset": verify_poset(log).passed,
            "mixing": verify_mixing(log).passed,
            "branches_sorted": verify_branch_sorted(outcome),
            "rim_sorted": verify_rim_sorted(outcome),
            "length_matches": len(log) == expected_total_fires(params),
        }
    if args.json:
        doc = {
            "k": params.k,
            "m": params.m,
            "strategy": args.strategy,
            "seed": args.seed,
            "outcome": [list(row) for row in outcome],
            "fires": len(log),
            "moves": [str(mv) for mv in log],
        }
        if args.verify:
            doc["verification"] = checks
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(f"outcome: {outcome_to_text(outcome)}\n")
        sys.stdout.write(f"fires: {len(log)}\n")
        if args.verify:
            summary = " ".join(f"{name}={'pass' if ok else 'FAIL'}" for name, ok in checks.items())
            sys.stdout.write(f"verification: {summary}\n")
    return 0 if all(checks.values()) else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    params = StarParams(args.k, args.m)
    result = enumerate_all(params, max_states=args.max_states)
    _emit(emit_table(result, "json" if args.json else "text"), args.out)
    return 0


def cmd_volmin(args: argparse.Namespace) -> int:
    params = StarParams(args.k, args.m)
    outcomes = enumerate_volmin(params)
    image = {to_outcome(t) for t in generate_syts(params.k, params.m)}
    matches = outcomes == image
    if args.json:
        doc = {
            "k": params.k,
            "m": params.m,
            "outcomes": [[list(row) for row in o] for o in sorted(outcomes)],
            "count": len(outcomes),
            "syt_count": len(image),
            "matches_syt_image": matches,
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(f"volatility-minimizing outcomes for k={params.k}, m={params.m}:\n")
        for o in sorted(outcomes):
            sys.stdout.write(outcome_to_text(o) + "\n")
        sys.stdout.write(f"count: {len(outcomes)}\n")
        sys.stdout.write(f"standard tableaux of this shape: {len(image)}\n")
        sys.stdout.write(f"matches the standard-tableau image: {'yes' if matches else 'NO'}\n")
    return 0 if matches else 1


def cmd_syt(args: argparse.Namespace) -> int:
    count = count_rect_syt(args.k, args.m)
    sys.stdout.write(f"standard tableaux of shape {args.k} x {args.m}: {count}\n")
    if not (args.list or args.witness):
        return 0
    tableaux = generate_syts(args.k, args.m)
    if args.list:
        for t in tableaux:
            sys.stdout.write(str(t) + "\n")
    if args.witness:
        params = StarParams(args.k, args.m)
        good = 0
        for t in tableaux:
            moves = witness_sequence(t)
            final, _ = engine.replay(params, moves)
            if final == to_outcome(t):
                good += 1
            else:
                sys.stdout.write(f"witness FAILED for {t}\n")
        sys.stdout.write(f"witness scripts replayed to their outcomes: {good}/{len(tableaux)}\n")
        if good != len(tableaux):
            return 1
    return 0


def cmd_montecarlo(args: argparse.Namespace) -> int:
    params = StarParams(args.k, args.m)
    report = run_montecarlo(params, args.trials, args.seed)
    text = emit_table(report, "json" if args.json else "text")
    if args.with_enumeration and not args.json:
        if params.n_chips <= DEFAULT_CELL_BUDGET:
            text += "\nsequence counts (not play probabilities):\n"
            text += emit_table(enumerate_all(params), "text")
        else:
            text += f"\n(enumeration skipped: k*m > {DEFAULT_CELL_BUDGET})\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    params = StarParams(args.k, args.m)
    expected_len = expected_total_fires(params)
    poset_fail = mixing_fail = branch_fail = rim_fail = length_fail = 0
    fire_counts: set[tuple] = set()
    outcomes = set()
    for i in range(args.samples):
        strategy = RandomUniform(derive_seed(args.seed, i))
        outcome, log = stabilize_labeled(initial_labeled(params), strategy)
        outcomes.add(outcome)
        if not verify_poset(log).passed:
            poset_fail += 1
        if not verify_mixing(log).passed:
            mixing_fail += 1
        if not verify_branch_sorted(outcome):
            branch_fail += 1
        if not verify_rim_sorted(outcome):
            rim_fail += 1
        if len(log) != expected_len:
            length_fail += 1
        fire_counts.add(tuple(sorted(log.per_vertex_fire_count.items())))
    confluent = len(fire_counts) == 1 and length_fail == 0
    lines = [
        f"verified {args.samples} random stabilizations of k={params.k}, m={params.m} (seed={args.seed})",
        f"endgame order check failures: {poset_fail}",
        f"center resend order check failures: {mixing_fail}",
        f"unsorted branches: {branch_fail}",
        f"unsorted rims: {rim_fail}",
        f"logs with unexpected length: {length_fail}",
        f"per-vertex fire counts identical across logs: {'yes' if len(fire_counts) == 1 else 'NO'}",
    ]
    support_ok = True
    if params.n_chips <= DEFAULT_CELL_BUDGET:
        support_ok = outcomes <= reachable_set(params)
        lines.append(f"observed outcomes within the reachable set: {'yes' if support_ok else 'NO'}")
    ok = (
        poset_fail == mixing_fail == branch_fail == rim_fail == 0
        and confluent
        and support_ok
    )
    lines.append(f"verification: {'PASS' if ok else 'FAIL'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starchip",
        description="Labeled chip-firing on subdivided star graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stabilize", help="play one game to stability")
    _add_km(p)
    p.add_argument("--strategy", choices=["det", "random", "volmin"], default="det")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true", help="run all checks on the produced log")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("enumerate", help="count all stabilization sequences")
    _add_km(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to FILE atomically")
    p.add_argument("--max-states", type=int, default=None, help="state budget; overrides the k*m cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("volmin", help="outcomes under volatility-minimizing play")
    _add_km(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_volmin)

    p = sub.add_parser("syt", help="count or list standard tableaux")
    _add_km(p)
    p.add_argument("--list", action="store_true")
    p.add_argument("--witness", action="store_true", help="replay a witness script per tableau")
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("montecarlo", help="seeded random-play frequency experiment")
    _add_km(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to FILE atomically")
    p.add_argument("--with-enumeration", action="store_true",
                   help="append the sequence-count table (text mode only)")
    p.set_defaults(func=cmd_montecarlo)

    p = sub.add_parser("verify", help="random logs through all verifiers")
    _add_km(p)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ChipGameError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

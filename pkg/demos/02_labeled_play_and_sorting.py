"""
Labeled chips sort themselves
=============================

Now give the chips labels 1..km. A center fire chooses k chips and routes
the i-th smallest to branch i; a branch fire chooses 2 chips and sends the
smaller inward, the larger outward. However the game is played, each branch
ends up sorted from the center outward, and the innermost and outermost
rings are sorted across branches too.
"""
from starchip import (
    StarParams,
    expected_total_fires,
    initial_labeled,
    make_strategy,
    outcome_to_text,
    stabilize_labeled,
    verify_branch_sorted,
    verify_mixing,
    verify_poset,
    verify_rim_sorted,
)

params = StarParams(k=3, m=3)

for name in ("det", "random", "volmin"):
    outcome, log = stabilize_labeled(initial_labeled(params), make_strategy(name, seed=2024))
    print(f"{name:>6}: {outcome_to_text(outcome)} in {len(log)} fires "
          f"(always {expected_total_fires(params)})")

# Play one noisy game and inspect its log.
outcome, log = stabilize_labeled(initial_labeled(params), make_strategy("random", seed=5))
print("\na random game, move by move:")
print(log.to_text())

print("branches sorted:      ", verify_branch_sorted(outcome))
print("inner/outer rims sorted:", verify_rim_sorted(outcome))

# The tail of every stabilization has rigid structure: the last fires of
# each vertex happen in a forced partial order, with exactly degree-many
# chips present, and successive center fires never send a larger chip to
# the same branch.
print("endgame order check:  ", verify_poset(log).passed)
print("center resend check:  ", verify_mixing(log).passed)

# Strict decrease is too much to ask: a branch may return the very chip it
# was just sent, and the center then sends it right back.
strict = verify_mixing(log, strict=True)
print(f"strictly decreasing resends: {strict.passed} "
      f"({len(strict.violations)} repeat(s) observed)")

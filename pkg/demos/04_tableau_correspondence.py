"""
Stable configurations as Young tableaux
=======================================

Writing branch i's chips as row i of a matrix (levels as columns) turns a
stable configuration into a tableau filling. Three facts make this view
productive:

* with two levels per branch, the reachable configurations are exactly the
  standard fillings, counted by the Catalan numbers;
* every standard filling is reachable at any size, by an explicit script;
* restricting play to "volatility-minimizing" fires (keep the number of
  ready vertices minimal, prefer vertices far from the center) reaches
  exactly the standard fillings and nothing else.
"""
from starchip import (
    StarParams,
    Tableau,
    catalan,
    count_rect_syt,
    enumerate_volmin,
    from_outcome,
    generate_syts,
    reachable_set,
    replay,
    to_outcome,
    witness_sequence,
)

# Catalan counting at m = 2.
for k in (2, 3, 4, 5):
    n_reachable = len(reachable_set(StarParams(k, 2), max_states=1_000_000))
    print(f"k={k}, m=2: {n_reachable} reachable configurations, catalan(k) = {catalan(k)}")

# Beyond m = 2 the reachable set is strictly larger than the standard ones;
# this branch-sorted configuration has its middle column out of order.
crooked = from_outcome(((1, 4, 7), (2, 3, 8), (5, 6, 9)))
print(f"\n{crooked} standard? {crooked.is_standard} (middle column: {crooked.column(1)})")

# Every standard tableau still has a scripted game landing exactly on it.
t = Tableau(((1, 2, 6), (3, 5, 8), (4, 7, 9)))
moves = witness_sequence(t)
final, _ = replay(StarParams(3, 3), moves)
print(f"\nscript of {len(moves)} moves lands on {final == to_outcome(t)} -> {t}")

# Volatility-minimizing play recovers exactly the standard fillings.
outcomes = enumerate_volmin(StarParams(3, 3))
image = {to_outcome(s) for s in generate_syts(3, 3)}
print(f"\nvolatility-minimizing 3x3 outcomes: {len(outcomes)}")
print(f"standard 3x3 fillings:              {count_rect_syt(3, 3)}")
print(f"the two sets are equal:             {outcomes == image}")

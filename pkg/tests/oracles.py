"""Independent reference implementations used only to check the package.

These deliberately avoid the package's data structures and memoization so
that agreement with them is meaningful evidence, not a tautology.
"""
from collections import Counter
from itertools import combinations

from starchip.rng import SplitMix64

CENTER = "C"


def _naive_moves(cfg, k):
    moves = []
    for v in sorted(cfg, key=lambda x: (0,) if x == CENTER else (1,) + x):
        chips = sorted(cfg[v])
        deg = k if v == CENTER else 2
        if len(chips) >= deg:
            moves.extend((v, comb) for comb in combinations(chips, deg))
    return moves


def _naive_apply(cfg, move, k):
    v, fired = move
    new = {u: set(s) for u, s in cfg.items()}
    for c in fired:
        new[v].remove(c)
    if v == CENTER:
        for i, c in enumerate(fired, start=1):
            new.setdefault((i, 1), set()).add(c)
    else:
        i, j = v
        a, b = fired
        new.setdefault(CENTER if j == 1 else (i, j - 1), set()).add(a)
        new.setdefault((i, j + 1), set()).add(b)
    return {u: frozenset(s) for u, s in new.items() if s}


def naive_sequence_counts(k: int, m: int) -> Counter:
    """Walk every maximal move sequence from the all-on-center start and
    tally final outcomes. No memoization: cost is the number of sequences."""
    tally: Counter = Counter()

    def walk(cfg):
        moves = _naive_moves(cfg, k)
        if not moves:
            rows = [[None] * m for _ in range(k)]
            for v, s in cfg.items():
                i, j = v
                rows[i - 1][j - 1] = next(iter(s))
            tally[tuple(tuple(r) for r in rows)] += 1
            return
        for mv in moves:
            walk(_naive_apply(cfg, mv, k))

    walk({CENTER: frozenset(range(1, k * m + 1))})
    return tally


def random_column_sorted_grid(rows: int, cols: int, rng: SplitMix64) -> tuple:
    """A uniform random arrangement of 1..rows*cols into columns, each column
    then sorted, yielding a grid whose columns strictly increase."""
    pool = list(range(1, rows * cols + 1))
    shuffled = []
    while pool:
        shuffled.append(pool.pop(rng.randrange(len(pool))))
    columns = [sorted(shuffled[c * rows:(c + 1) * rows]) for c in range(cols)]
    return tuple(tuple(columns[c][r] for c in range(cols)) for r in range(rows))

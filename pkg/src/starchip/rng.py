"""Self-contained deterministic pseudo-random generator.

Randomized runs must be reproducible from a seed alone, independent of
platform and interpreter version, so the package carries its own generator
instead of relying on ``random``'s stream stability. The algorithm is
splitmix64: state advances by a fixed odd constant and each output is a
finalizing bit mix of the state. It is not cryptographic; it is a small,
well-understood stream with good equidistribution for simulation use.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed for the index-th child stream: the (index+1)-th raw output of a
    splitmix64 stream seeded with ``seed``. O(1) and collision-resistant
    enough for independent simulation trials."""
    if index < 0:
        raise ValueError("index must be >= 0")
    return _mix((seed + (index + 1) * _GOLDEN) & _MASK64)


class SplitMix64:
    """Deterministic 64-bit generator; equal seeds give equal streams."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection sampling."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def choice(self, seq):
        if not seq:
            raise ValueError("cannot choose from an empty sequence")
        return seq[self.randrange(len(seq))]

    def subset(self, pool, size: int) -> tuple:
        """Uniform random size-subset of ``pool``, returned sorted.

        Drawn by sequential removal without replacement, which induces the
        uniform distribution on subsets.
        """
        items = sorted(pool)
        if size > len(items):
            raise ValueError(f"cannot draw {size} items from {len(items)}")
        picked = []
        for _ in range(size):
            picked.append(items.pop(self.randrange(len(items))))
        return tuple(sorted(picked))

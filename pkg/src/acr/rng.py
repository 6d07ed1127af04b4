"""Deterministic random stream used by every stochastic operation.

A SplitMix64 generator: 64-bit state, one add + three xor-shift-multiply
steps per output. It is small enough to reimplement identically in the
compiled engine, which is the point — the pure and compiled engines must
consume draws from the same stream in the same order so that a run is
bit-reproducible regardless of which engine executed it.

Integer draws use plain modulo reduction. The bias for the ranges used
here (n <= 10**6 against a 64-bit word) is below 2**-40 and invisible to
the statistical tests; keeping the reduction trivial keeps the two engine
implementations trivially identical.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0**-53


class RandomStream:
    """Single-owner deterministic pseudorandom generator.

    Identical seeds yield identical output sequences on every platform.
    """

    __slots__ = ("seed", "state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self.state = self.seed

    def next_u64(self) -> int:
        s = (self.state + _GAMMA) & _MASK64
        self.state = s
        z = (s ^ (s >> 30)) * _MIX1 & _MASK64
        z = (z ^ (z >> 27)) * _MIX2 & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("randbelow() needs a positive bound")
        return self.next_u64() % n

    def randint1(self, n: int) -> int:
        """Uniform integer in [1, n], the paper-style random(n)."""
        return self.randbelow(n) + 1

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 significant bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def shuffle(self, items) -> None:
        """In-place Fisher-Yates shuffle of a mutable sequence."""
        for i in range(len(items) - 1, 0, -1):
            r = self.randbelow(i + 1)
            items[i], items[r] = items[r], items[i]

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed})"

# -*- coding: utf-8 -*-
"""Seeded pseudo-random generator used for every randomized construction."""

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """
    SplitMix64 generator.

    Parameters
    ----------
    seed : int
        Any integer; reduced modulo 2**64.
    """

    def __init__(self, seed=0):
        self.seed = seed
        self._state = seed & _MASK64

    def next_u64(self):
        """int: Next raw 64-bit output."""
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, low, high):
        """int: Uniform integer in the closed range [low, high]."""
        if high < low:
            raise ValueError("empty range [%s, %s]" % (low, high))
        span = high - low + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            value = self.next_u64()
            if value < limit:
                return low + value % span

    def random(self):
        """float: Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, items):
        """Pick one element of a non-empty sequence."""
        return items[self.randint(0, len(items) - 1)]

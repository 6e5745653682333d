"""Deterministic splittable random streams.

Every stochastic choice in this package (control sampling, dataset
offsets, weight initialization, shuffles) is driven by SplitMix64
streams derived from a single master seed plus integer coordinates.
Because a stream seed is a pure function of ``(master_seed, coords...)``,
any record or shuffle can be regenerated in isolation and the byte-level
output never depends on generation order, thread count, or the installed
numpy version.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(value: int) -> int:
    """SplitMix64 finalization mix; a bijection on 64-bit integers."""
    z = value & MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, *coords: int) -> int:
    """Derive an independent stream seed from a master seed and coordinates.

    Folds each coordinate through the mixer, so streams for distinct
    coordinate tuples are statistically independent.
    """
    z = mix64(master_seed)
    for c in coords:
        z = mix64(z ^ ((c * _GAMMA) & MASK64))
    return z


class SplitMix64:
    """Minimal 64-bit generator with exact cross-platform reproducibility.

    Not cryptographic.  State advances by a fixed odd constant and the
    output is `mix64` of the state, so the i-th output is a pure function
    of ``seed`` and ``i`` (see `splitmix64_array` for the vectorized form).
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        return mix64(self._state)

    def uniform(self) -> float:
        """Uniform double in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) without modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def sign(self) -> int:
        """Uniform choice from {-1, +1}."""
        return 1 if self.next_u64() >> 63 else -1

    def distinct(self, k: int, lo: int, hi: int) -> list[int]:
        """k distinct integers drawn uniformly from [lo, hi], unsorted.

        Redraws whole batches until all k values differ; uniform over
        ordered k-tuples of distinct values, hence uniform over k-subsets
        after sorting.
        """
        span = hi - lo + 1
        if k > span:
            raise ValueError("cannot draw more distinct values than the range holds")
        while True:
            draws = [lo + self.below(span) for _ in range(k)]
            if len(set(draws)) == k:
                return draws

def splitmix64_array(seed: int, n: int) -> np.ndarray:
    """First n outputs of SplitMix64(seed) as a uint64 array.

    Bit-identical to calling ``SplitMix64(seed).next_u64()`` n times.
    """
    idx = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + idx * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def uniform_array(seed: int, n: int) -> np.ndarray:
    """n uniform doubles in [0, 1) from the stream of ``seed``."""
    return (splitmix64_array(seed, n) >> np.uint64(11)) * 2.0 ** -53


def permutation(seed: int, n: int) -> np.ndarray:
    """Deterministic permutation of range(n) keyed by ``seed``."""
    return np.argsort(splitmix64_array(seed, n), kind="stable")

"""Deterministic counter-based pseudo-random generator.

The generator is pinned by this repository (SplitMix64 output function over a
keyed counter) rather than delegating to the host language's default RNG, so
that seeds reproduce identical streams everywhere.  Streams are splittable:
``split(tag)`` derives an independent child generator, which makes per-case
seeding order-independent.
"""

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a 64-bit bijective mixing function."""
    x = (x + _GOLDEN) & _MASK
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK
    x ^= x >> 31
    return x


class CounterRng:
    """Keyed counter generator: output i is ``mix64(key + i * GOLDEN)``."""

    __slots__ = ("_key", "_counter")

    def __init__(self, seed: int, stream: int = 0):
        self._key = mix64((seed & _MASK) ^ mix64(stream & _MASK))
        self._counter = 0

    def split(self, tag: int) -> "CounterRng":
        """Independent child generator; deterministic in (self key, tag)."""
        child = CounterRng.__new__(CounterRng)
        child._key = mix64(self._key ^ mix64(tag & _MASK))
        child._counter = 0
        return child

    def u64(self) -> int:
        self._counter += 1
        return mix64((self._key + self._counter * _GOLDEN) & _MASK)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * (self.u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], endpoints included."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.u64() % (hi - lo + 1)

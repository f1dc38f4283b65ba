"""SplitMix64 with a documented integer-range mapping.

The generator is Steele, Lea and Flood's SplitMix64: the state advances by
0x9E3779B97F4A7C15 modulo 2**64 and each output is the usual
xor-shift/multiply finalizer of the new state.  ``randint(lo, hi)`` draws
uniformly by rejection: with span = hi - lo + 1 and
limit = (2**64 // span) * span, outputs x >= limit are discarded and
lo + x % span is returned.  Matrices are filled row-major.  These rules
are all that is needed to regenerate the same matrices elsewhere.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        if span > 1 << 64:
            raise ValueError("range wider than 2**64")
        limit = ((1 << 64) // span) * span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def int_matrix(self, n, lo, hi):
        """n x n list-of-lists of integers in [lo, hi], row-major draw order."""
        return [[self.randint(lo, hi) for _ in range(n)] for _ in range(n)]

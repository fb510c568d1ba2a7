"""Deterministic pseudo-random numbers for reproducible transcripts.

Certificates must replay bit-for-bit across platforms and Python versions, so
randomized searches (meataxe word sampling, equal-degree splitting) draw from
this xorshift64 generator instead of the stdlib Mersenne twister.  The state
update is Marsaglia's 13/7/17 xorshift; quality is plenty for picking words
and coefficients, and the whole generator fits in a screenful.
"""

_MASK = (1 << 64) - 1

# Golden-ratio constant; also used to displace a zero seed, which xorshift
# cannot accept (zero is a fixed point).
_PHI = 0x9E3779B97F4A7C15


class XorShift64:
    """xorshift64 PRNG with explicit 64-bit state."""

    __slots__ = ("state",)

    def __init__(self, seed=0):
        s = (int(seed) ^ _PHI) & _MASK
        self.state = s if s else _PHI

    def next_u64(self):
        """Advance the state and return the next 64-bit value."""
        x = self.state
        x ^= (x << 13) & _MASK
        x ^= x >> 7
        x ^= (x << 17) & _MASK
        self.state = x
        return x

    def randrange(self, n):
        """Uniform integer in [0, n), by rejection so there is no modulo bias."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

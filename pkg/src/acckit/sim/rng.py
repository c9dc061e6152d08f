"""Seeded 32-bit linear congruential generator.

The same seed gives the same stream on every platform, which is what the
golden-frame and transcript tests rely on.
"""

MULTIPLIER = 1664525
INCREMENT = 1013904223
MASK32 = 0xFFFFFFFF


class Lcg:
    __slots__ = ("state",)

    def __init__(self, seed: int = 1):
        self.state = seed & MASK32

    def __repr__(self) -> str:
        return "Lcg(state=%d)" % self.state

    def next_u32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK32
        return self.state

    def next_high(self) -> int:
        # low bits of an LCG have short periods; only the top 16 are handed out
        return self.next_u32() >> 16

    def jitter(self) -> int:
        """Uniform-ish draw from -2..2."""
        return self.next_high() % 5 - 2

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range %d..%d" % (lo, hi))
        return lo + self.next_high() % (hi - lo + 1)

    def copy(self) -> "Lcg":
        return Lcg(self.state)


def next_jitter(rng: Lcg) -> int:
    return rng.jitter()

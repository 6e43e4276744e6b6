"""Portable seeded random source.

PCG32 (XSH RR output, 64-bit LCG state) is specified bit for bit, so a seed reproduces the
same run on every platform and Python version. Bounded draws use rejection sampling.
"""

from typing import List, MutableSequence, Protocol, TypeVar

MASK64 = 0xFFFF_FFFF_FFFF_FFFF
MASK32 = 0xFFFF_FFFF
PCG_MULTIPLIER = 6364136223846793005
GOLDEN_GAMMA = 0x9E37_79B9_7F4A_7C15

T = TypeVar("T")


class Sampler(Protocol):
    def randbelow(self, n: int) -> int:
        ...


class Pcg32:
    def __init__(self, seed: int, stream: int = 0):
        seed &= MASK64
        self.state = 0
        # selects the sequence; must be odd
        self.inc = ((stream << 1) & MASK64) | 1
        self.next_u32()
        self.state = (self.state + seed) & MASK64
        self.next_u32()

    def next_u32(self) -> int:
        old = self.state
        self.state = (old * PCG_MULTIPLIER + self.inc) & MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & MASK32
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & MASK32

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased for n up to 2**32."""
        if n <= 0:
            raise ValueError(f"randbelow needs a positive bound, got {n}")
        if n > MASK32 + 1:
            raise ValueError(f"randbelow bound {n} exceeds 2**32")
        threshold = (MASK32 + 1) % n
        while True:
            r = self.next_u32()
            if r >= threshold:
                return r % n

    def shuffle(self, items: MutableSequence[T]) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


class FixedChoice:
    """Sampler that always returns the same index, clamped to the bound.

    ``FixedChoice(0)`` always picks the smallest candidate color.
    """

    def __init__(self, index: int = 0):
        self.index = index

    def randbelow(self, n: int) -> int:
        return min(self.index, n - 1)


class ScriptedChoice:
    """Sampler replaying a fixed list of indices, then falling back to ``fallback``."""

    def __init__(self, indices: List[int], fallback: int = 0):
        self.indices = list(indices)
        self.fallback = fallback
        self.position = 0

    def randbelow(self, n: int) -> int:
        if self.position < len(self.indices):
            value = self.indices[self.position]
            self.position += 1
        else:
            value = self.fallback
        if not 0 <= value < n:
            raise ValueError(f"scripted index {value} outside [0, {n})")
        return value


def splitmix64(x: int) -> int:
    z = (x + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB) & MASK64
    return z ^ (z >> 31)


def derive_trial_seed(seed: int, trial_index: int) -> int:
    """Independent 64-bit seed for trial ``trial_index`` of a bench started from ``seed``."""
    return splitmix64((seed & MASK64) ^ splitmix64(trial_index))

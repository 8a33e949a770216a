# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Deterministic random number generation.

Every instance generator in diffinfo draws from a SplitMix64 stream, so a
seed reproduces a codebook or an SB-XOR instance bit for bit on any platform.
"""

from typing import Sequence, TypeVar

from .._options.constants import DiffInfoConstants


Constants = DiffInfoConstants()
T = TypeVar("T")


class SplitMix64:
    """ generate a deterministic random sequence of 64-bit words """

    GAMMA = Constants.SPLITMIX["gamma"]
    MIX1 = Constants.SPLITMIX["mix1"]
    MIX2 = Constants.SPLITMIX["mix2"]
    MASK = Constants.MASK64

    def __init__(self, seed: int = 0):
        if seed < 0:
            raise ValueError(f"Seeds are natural numbers, got {seed}.")
        self.state = seed & self.MASK
        self._bits = 0
        self._nbits = 0

    def next64(self) -> int:
        self.state = (self.state + self.GAMMA) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX1) & self.MASK
        z = ((z ^ (z >> 27)) * self.MIX2) & self.MASK
        return z ^ (z >> 31)

    def bits(self, count: int) -> int:
        """
        The next `count` bits of the stream as an integer; words are consumed
        most significant bit first and leftover bits are kept for the next call.
        """
        while self._nbits < count:
            self._bits = (self._bits << 64) | self.next64()
            self._nbits += 64
        self._nbits -= count
        out = self._bits >> self._nbits
        self._bits &= (1 << self._nbits) - 1
        return out

    def below(self, bound: int) -> int:
        """ Uniform draw from [0, bound) by rejection. """
        if bound < 1:
            raise ValueError(f"Empty sampling interval [0, {bound}).")
        if bound == 1:
            return 0
        width = (bound - 1).bit_length()
        while True:
            draw = self.bits(width)
            if draw < bound:
                return draw

    def interval(self, lo: int, hi: int) -> int:
        """ Uniform draw from the closed interval [lo, hi]. """
        return lo + self.below(hi - lo + 1)

    def coin(self) -> bool:
        return self.bits(1) == 1

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from typing import Iterable, List, Tuple

from ..errors import DomainError, nat
from .finset import FinSet


class BitVector:
    """
    A fixed-length string of bits.

    Position 0 is the leftmost character of the text form. Internally the bits
    are one Python integer read as a binary number, so position i is bit
    (length - 1 - i) of `value`, and "100" has value 4.
    """

    __slots__ = ("_value", "_length")

    def __init__(self, value: int, length: int):
        self._value = nat(value, "value")
        self._length = nat(length, "length")
        if self._value >> self._length:
            raise DomainError(f"Value {value} does not fit in {length} bits.")

    @classmethod
    def from_string(cls, text: str):
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise DomainError(f"A bit string may only contain 0 and 1, got '{text}'.")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]):
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise DomainError(f"Bits must be 0 or 1, got {b}.")
            value = (value << 1) | b
        return cls(value, len(bits))

    @classmethod
    def from_indices(cls, indices: Iterable[int], length: int):
        value = 0
        for i in indices:
            if not 0 <= i < length:
                raise DomainError(f"Position {i} is outside a bit string of length {length}.")
            value |= 1 << (length - 1 - i)
        return cls(value, length)

    @classmethod
    def zeros(cls, length: int):
        return cls(0, length)

    @property
    def value(self) -> int:
        return self._value

    @property
    def length(self) -> int:
        return self._length

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple(self[i] for i in range(self._length))

    def indices(self) -> List[int]:
        """ Positions holding a 1, ascending. """
        return [i for i in range(self._length) if self[i]]

    def weight(self) -> int:
        return bin(self._value).count("1")

    def flip(self, i: int):
        if not 0 <= i < self._length:
            raise DomainError(f"Position {i} is outside a bit string of length {self._length}.")
        return type(self)(self._value ^ (1 << (self._length - 1 - i)), self._length)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._length:
            raise IndexError(f"Position {i} is outside a bit string of length {self._length}.")
        return (self._value >> (self._length - 1 - i)) & 1

    def __len__(self):
        return self._length

    def __xor__(self, other):
        if not isinstance(other, BitVector):
            return NotImplemented
        if other._length != self._length:
            raise DomainError(f"Cannot xor bit strings of lengths {self._length} and {other._length}.")
        return BitVector(self._value ^ other._value, self._length)

    def __eq__(self, other):
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._value == other._value and self._length == other._length

    def __hash__(self):
        return hash((self._value, self._length))

    def __bool__(self):
        return self._value != 0

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    def __str__(self):
        return format(self._value, f"0{self._length}b") if self._length else ""


class CharString(BitVector):
    """ Characteristic string of a subset: position i is set iff i is in the subset. """

    __slots__ = ()

    @classmethod
    def from_finset(cls, s: FinSet, length: int):
        if s and s.max() >= length:
            raise DomainError(f"Set {s} does not fit in a characteristic string of length {length}.")
        return cls.from_indices(s, length)

    def to_finset(self) -> FinSet:
        return FinSet(self.indices())

# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from typing import Iterable, List, Tuple

from ..errors import DomainError, nat


class FinSet:
    """
    A finite set of natural numbers, an element of the power set of N.

    Elements may be given in any order; they are stored strictly ascending.
    Duplicates are rejected rather than merged, since a repeated element
    almost always means the caller built the wrong set.
    """

    __slots__ = ("_elems",)

    def __init__(self, elems: Iterable[int] = ()):
        values = sorted(nat(v, "FinSet element") for v in elems)
        for a, b in zip(values, values[1:]):
            if a == b:
                raise DomainError(f"FinSet elements must be distinct; {a} occurs twice.")
        self._elems: Tuple[int, ...] = tuple(values)

    @classmethod
    def of_range(cls, n: int) -> "FinSet":
        """ The set {0, 1, ..., n-1}. """
        return cls(range(nat(n, "n")))

    @property
    def elems(self) -> Tuple[int, ...]:
        return self._elems

    def max(self) -> int:
        if not self._elems:
            raise DomainError("The empty set has no maximum.")
        return self._elems[-1]

    def __len__(self):
        return len(self._elems)

    def __iter__(self):
        return iter(self._elems)

    def __contains__(self, item):
        return item in self._elems

    def __getitem__(self, index):
        return self._elems[index]

    def __bool__(self):
        return bool(self._elems)

    def __eq__(self, other):
        if isinstance(other, FinSet):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self):
        return hash(("FinSet", self._elems))

    def __repr__(self):
        return f"FinSet({list(self._elems)})"

    def __str__(self):
        return "{" + ",".join(str(e) for e in self._elems) + "}"

    def to_json(self) -> List[str]:
        return [str(e) for e in self._elems]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "FinSet":
        return cls(int(v) for v in data)

# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from typing import NamedTuple

from ..errors import nat


class _Cell(NamedTuple):
    x: int
    y: int


class Point(_Cell):
    """ A cell (x, y) of the discrete plane N^2. """

    __slots__ = ()

    def __new__(cls, x: int, y: int):
        return super().__new__(cls, nat(x, "x"), nat(y, "y"))

    @property
    def shell(self) -> int:
        """ Taxicab distance to the origin, i.e. the counter-diagonal index. """
        return self.x + self.y

    def __str__(self):
        return f"({self.x},{self.y})"

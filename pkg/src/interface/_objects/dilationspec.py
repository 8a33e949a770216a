# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from ..errors import DomainError, nat
from .._options.options import RateKind


class DilationSpec:
    """
    Rate function of an elastic dilation of the plane.

    constant:   r(x) = c
    linear:     r(x) = c x
    polynomial: r(x) = c x^k

    `reference` selects the exact, non-integer reference variant
    (c x, y / c), which is only defined for constant rates.
    """

    def __init__(self, rate=RateKind.constant, c: int = 1, k: int = 1, reference: bool = False):
        self.rate = RateKind(rate)
        self.c = nat(c, "c")
        self.k = nat(k, "k")
        if self.c < 1:
            raise DomainError("The rate constant c must be at least 1.")
        if self.k < 1:
            raise DomainError("The rate exponent k must be at least 1.")
        if self.rate == RateKind.linear:
            self.k = 1
        if reference and self.rate != RateKind.constant:
            raise DomainError("Reference dilations are defined for constant rates only.")
        self.reference = bool(reference)

    @classmethod
    def constant(cls, c: int) -> "DilationSpec":
        return cls(RateKind.constant, c)

    @classmethod
    def linear(cls, c: int = 1) -> "DilationSpec":
        return cls(RateKind.linear, c)

    @classmethod
    def polynomial(cls, c: int, k: int) -> "DilationSpec":
        return cls(RateKind.polynomial, c, k)

    def rate_at(self, x: int) -> int:
        if self.rate == RateKind.constant:
            return self.c
        return self.c * x ** self.k

    @property
    def min_column(self) -> int:
        """ Smallest x for which the rate is at least 1. """
        return 0 if self.rate == RateKind.constant else 1

    def __eq__(self, other):
        if not isinstance(other, DilationSpec):
            return NotImplemented
        return ((self.rate, self.c, self.k, self.reference)
                == (other.rate, other.c, other.k, other.reference))

    def __hash__(self):
        return hash((self.rate, self.c, self.k, self.reference))

    def __repr__(self):
        return (f"DilationSpec(rate={self.rate.value!r}, c={self.c}, k={self.k}"
                + (", reference=True)" if self.reference else ")"))

    def __str__(self):
        if self.rate == RateKind.constant:
            return f"r(x) = {self.c}"
        if self.k == 1:
            return f"r(x) = {self.c}x"
        return f"r(x) = {self.c}x^{self.k}"

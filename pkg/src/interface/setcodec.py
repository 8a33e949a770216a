# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Bijections between finite sets of naturals, the plane and N.

  combinadic_rank / combinadic_unrank:  k-sets <-> N (lexicographic rank)
  phi_car / phi_car_inv:                 finite non-empty sets <-> N^2 <-> N
  upsilon / upsilon_inv:                 finite sets <-> N (binary reading)
  endo:                                  upsilon composed with phi_car_inv

Sets of cardinality k sit in column k - 1 of the plane, at the row given by
their combinadic rank.
"""

from typing import List

from .errors import DomainError, nat, require
from .numeric import binom, info
from .objects import CharString, FinSet, Point
from .pairing import pair, unpair
from .utils.rand import SplitMix64


def _nonempty(s: FinSet, what: str) -> FinSet:
    if not isinstance(s, FinSet):
        s = FinSet(s)
    if not s:
        raise DomainError(f"{what} is not defined for the empty set.")
    return s


def combinadic_rank(s: FinSet) -> int:
    """ sigma(s) = binom(s_1, 1) + binom(s_2, 2) + ... for s_1 < s_2 < ... """
    s = _nonempty(s, "combinadic_rank")
    return sum(binom(e, i) for i, e in enumerate(s, start=1))


def _largest_below(i: int, idx: int) -> int:
    """ Largest c with binom(c, i) <= idx. """
    lo = i - 1
    hi = max(i, 1)
    while binom(hi, i) <= idx:
        lo, hi = hi, 2 * hi
    # binom(lo, i) <= idx < binom(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, i) <= idx:
            lo = mid
        else:
            hi = mid
    return lo


def combinadic_unrank(k: int, idx: int) -> FinSet:
    """ The k-set with combinadic rank idx, by greedy descent on binomials. """
    k, idx = nat(k, "k"), nat(idx, "idx")
    require(k >= 1, "combinadic_unrank needs a cardinality of at least 1.")
    elems = []
    for i in range(k, 0, -1):
        c = _largest_below(i, idx)
        elems.append(c)
        idx -= binom(c, i)
    return FinSet(elems)


def phi_car(s: FinSet) -> Point:
    s = _nonempty(s, "phi_car")
    return Point(len(s) - 1, combinadic_rank(s))


def phi_car_index(s: FinSet) -> int:
    return pair(phi_car(s))


def phi_car_inv(n: int) -> FinSet:
    x, y = unpair(n)
    return combinadic_unrank(x + 1, y)


def upsilon(s: FinSet) -> int:
    """ Sum of 2^e over the elements; the empty set goes to 0. """
    if not isinstance(s, FinSet):
        s = FinSet(s)
    return sum(1 << e for e in s)


def upsilon_inv(n: int) -> FinSet:
    n = nat(n, "n")
    return FinSet(i for i in range(n.bit_length()) if (n >> i) & 1)


def endo(n: int) -> int:
    return upsilon(phi_car_inv(n))


def cond_subset_info(n: int, k: int) -> float:
    """ Information needed to pick a k-subset from an n-set. """
    n, k = nat(n, "n"), nat(k, "k")
    if k > n:
        raise DomainError(f"Cannot choose {k} elements from {n}.")
    return info(binom(n, k))


def car_bin_divergence(s: FinSet) -> float:
    """ Extra bits phi_car spends on s compared to the binary reading. """
    s = _nonempty(s, "car_bin_divergence")
    return info(phi_car_index(s)) - info(upsilon(s))


def to_charstring(s: FinSet, length: int) -> CharString:
    if not isinstance(s, FinSet):
        s = FinSet(s)
    return CharString.from_finset(s, nat(length, "length"))


def from_charstring(cs: CharString) -> FinSet:
    return FinSet(cs.indices())


def string_typical_set(k: int, seed: int = 0) -> FinSet:
    """
    A k-set with largest element 2k. The other k - 1 elements come from
    ascending passes over 0..2k-1, taking each number not yet chosen on a
    fair coin, until the set holds k elements.
    """
    k = nat(k, "k")
    require(k >= 1, "A string-typical set needs k >= 1.")
    rng = SplitMix64(seed)
    chosen = {2 * k}
    while len(chosen) < k:
        for i in range(2 * k):
            if i not in chosen and rng.coin():
                chosen.add(i)
                if len(chosen) == k:
                    break
    return FinSet(chosen)


def pascal_column(n: int, k: int) -> List[FinSet]:
    """ The first binom(n, k) sets of cardinality k in phi_car order. """
    n, k = nat(n, "n"), nat(k, "k")
    require(k >= 1, "Cardinality columns start at k = 1.")
    return [combinadic_unrank(k, i) for i in range(binom(n, k))]

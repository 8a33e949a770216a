# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Sorted injections of the finite sets into N.

An arithmetical function zeta sorts the sets into types; phi_zeta(s) pairs
the type zeta(s) with theta(s), the number of sets of the same type that come
before s in phi_car order. Computing theta means walking phi_car order, so it
takes time exponential in the size of the representation of s. The walk is
bounded by Options.theta_warn (warning) and Options.theta_limit (error).
"""

import math
import threading
import warnings
from collections import Counter
from typing import Iterable, List, Optional, Union

import numpy as np

from .errors import BudgetError, BudgetWarning, DomainError, nat, require, require_budget
from .numeric import subset_values
from .objects import FinSet
from .options import CensusTable, DensityResult, ZetaKind, resolve_options
from .pairing import pair, unpair
from .setcodec import combinadic_rank, combinadic_unrank, phi_car_index, phi_car_inv, upsilon, upsilon_inv


def zeta_eval(kind: ZetaKind, s: FinSet) -> int:
    kind = ZetaKind(kind)
    if not isinstance(s, FinSet):
        s = FinSet(s)
    if not s:
        raise DomainError("Sorted injections are not defined for the empty set.")
    if kind == ZetaKind.cardinality:
        return len(s)
    if kind == ZetaKind.sum:
        return sum(s)
    if kind == ZetaKind.product:
        return math.prod(s)
    if kind == ZetaKind.binary:
        return upsilon(s)
    return sum(s) % 2


def _type_column(kind: ZetaKind, z: int) -> int:
    # cardinality keeps the phi_car layout: column |s| - 1
    return z - 1 if kind == ZetaKind.cardinality else z


class ThetaCensus:
    """
    Incremental scan of phi_car order for one zeta kind.

    After scanning the first N indices, theta of any of them is a lookup.
    The scan is guarded by a lock, so one census can serve several threads;
    readers always see a prefix of phi_car order that is complete.
    """

    def __init__(self, kind: ZetaKind, options=None):
        self.kind = ZetaKind(kind)
        self.options = resolve_options(options)
        self._lock = threading.Lock()
        self._zetas: List[int] = []
        self._thetas: List[int] = []
        self._seen: Counter = Counter()

    def __len__(self):
        return len(self._zetas)

    def extend(self, n: int) -> None:
        """ Scan phi_car indices below n. """
        n = nat(n, "n")
        if n > self.options.theta_limit:
            raise BudgetError(f"ThetaCensus: scanning {n} sets exceeds theta_limit {self.options.theta_limit}.")
        with self._lock:
            for i in range(len(self._zetas), n):
                z = zeta_eval(self.kind, phi_car_inv(i))
                self._zetas.append(z)
                self._thetas.append(self._seen[z])
                self._seen[z] += 1

    def theta(self, index: int) -> int:
        """ theta of the set with phi_car index `index`. """
        if index >= len(self._thetas):
            self.extend(index + 1)
        return self._thetas[index]

    def find(self, z: int, theta: int, limit: int) -> Optional[int]:
        """ Index of the theta-th set of type z among the first `limit` indices. """
        start, end = 0, max(len(self._zetas), 1024)
        while start < limit:
            end = min(end, limit)
            self.extend(end)
            for i in range(start, end):
                if self._zetas[i] == z and self._thetas[i] == theta:
                    return i
            start, end = end, 2 * end
        return None

    def snapshot(self, n: int) -> CensusTable:
        """ Counts of the zeta values among the first n indices. """
        self.extend(n)
        with self._lock:
            counts = Counter(self._zetas[:n])
        return CensusTable(counts, f"{self.kind.value} over phi_car indices 0..{n - 1}")


def _check_theta_budget(index: int, options) -> None:
    if index > options.theta_limit:
        raise BudgetError(f"theta_index: phi_car index {index} exceeds theta_limit {options.theta_limit}.")
    if index > options.theta_warn:
        warnings.warn(f"theta_index: scanning {index} sets in phi_car order.", BudgetWarning, stacklevel=3)


def theta_index(kind: ZetaKind, s: FinSet, options=None, census: Optional[ThetaCensus] = None) -> int:
    """
    Number of sets s' with phi_car_index(s') < phi_car_index(s) and
    zeta(s') = zeta(s).

    For the cardinality kind this is the combinadic rank of s, since all sets
    of one cardinality form a column of the phi_car plane in rank order.
    """
    kind = ZetaKind(kind)
    z = zeta_eval(kind, s)
    if kind == ZetaKind.cardinality:
        return combinadic_rank(s)
    index = phi_car_index(s)
    if census is not None:
        require(census.kind == kind, f"The census counts {census.kind.value}, not {kind.value}.")
        return census.theta(index)
    options = resolve_options(options)
    _check_theta_budget(index, options)
    return sum(1 for i in range(index) if zeta_eval(kind, phi_car_inv(i)) == z)


def phi_zeta(kind: ZetaKind, s: FinSet, options=None, census: Optional[ThetaCensus] = None) -> int:
    kind = ZetaKind(kind)
    z = zeta_eval(kind, s)
    return pair((_type_column(kind, z), theta_index(kind, s, options, census)))


# types larger than this are scanned without an upper bound on theta
_COUNT_LIMIT = 1 << 12


def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _family_size(kind: ZetaKind, z: int) -> Optional[int]:
    """ Number of non-empty sets of type z; None when infinite or too large to count. """
    if kind in (ZetaKind.cardinality, ZetaKind.parity):
        return None
    if kind == ZetaKind.binary:
        return 1 if z >= 1 else 0
    if kind == ZetaKind.sum:
        if z > _COUNT_LIMIT:
            return None
        # subsets of {0..z} with sum z; 0 may be added to any of them
        ways = [1] + [0] * z
        for e in range(1, z + 1):
            for t in range(z, e - 1, -1):
                ways[t] += ways[t - e]
        return 1 if z == 0 else 2 * ways[z]
    if z == 0 or z > _COUNT_LIMIT ** 3:
        return None
    divisors = _divisors(z)
    if len(divisors) > _COUNT_LIMIT.bit_length():
        return None
    values = subset_values(divisors, "product")
    return int(np.count_nonzero(values[1:] == z))


def phi_zeta_inv(kind: ZetaKind, n: int, options=None, census: Optional[ThetaCensus] = None) -> Optional[FinSet]:
    """
    The set s with phi_zeta(s) = n, found by scanning phi_car order; None
    when n encodes no set. Raises BudgetError when the scan would pass
    theta_limit.
    """
    kind = ZetaKind(kind)
    options = resolve_options(options)
    col, theta = unpair(n)
    if kind == ZetaKind.cardinality:
        return combinadic_unrank(col + 1, theta)
    if kind == ZetaKind.binary:
        return upsilon_inv(col) if col >= 1 and theta == 0 else None
    if kind == ZetaKind.parity and col > 1:
        return None
    size = _family_size(kind, col)
    if size is not None and theta >= size:
        return None
    if census is None:
        census = ThetaCensus(kind, options)
    index = census.find(col, theta, options.theta_limit)
    if index is None:
        raise BudgetError(f"phi_zeta_inv: set {theta} of type {col} lies beyond theta_limit {options.theta_limit}.")
    return phi_car_inv(index)


def _zeta_array(base: FinSet, kind: ZetaKind) -> np.ndarray:
    elems = list(base)
    if kind == ZetaKind.cardinality:
        return subset_values([1] * len(elems))
    if kind == ZetaKind.sum:
        return subset_values(elems)
    if kind == ZetaKind.product:
        return subset_values(elems, "product")
    if kind == ZetaKind.binary:
        return subset_values([1 << e for e in elems])
    return subset_values(elems) % 2


def multiset_table(values: Iterable[int], universe: str = "values") -> CensusTable:
    if isinstance(values, np.ndarray):
        uniq, counts = np.unique(values, return_counts=True)
        return CensusTable(dict(zip((int(v) for v in uniq), counts.tolist())), universe)
    return CensusTable(Counter(nat(v) for v in values), universe)


def powerset_dilation(base: FinSet, kind: ZetaKind, options=None) -> CensusTable:
    """ zeta of every non-empty subset of base, as a sorted multiset. """
    kind = ZetaKind(kind)
    options = resolve_options(options)
    if not isinstance(base, FinSet):
        base = FinSet(base)
    require_budget(len(base), options.powerset_bound, "powerset_dilation")
    values = _zeta_array(base, kind)[1:]
    return multiset_table(values, f"non-empty subsets of {base}")


def density_census(values: Union[Iterable[int], CensusTable], n: int) -> DensityResult:
    """
    c = number of distinct values v with 1 <= v <= n, d = c / n and the
    decay n / c (None when c = 0).
    """
    n = nat(n, "n")
    require(n >= 1, "density_census needs n >= 1.")
    if isinstance(values, CensusTable):
        values = values.counts.keys()
    if isinstance(values, np.ndarray):
        c = int(np.unique(values[(values >= 1) & (values <= n)]).size)
    else:
        c = len({v for v in values if 1 <= v <= n})
    return DensityResult(c, c / n, None if c == 0 else n / c)

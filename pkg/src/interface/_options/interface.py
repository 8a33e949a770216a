# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Result containers returned by the enumerating operations.

Each container keeps its raw data, renders a short human-readable summary
with str(), and serializes itself to the CSV schema of its table type.
"""

from bisect import bisect_left, bisect_right
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .constants import DiffInfoConstants
from ..utils.utility import csv_text, format_info


Constants = DiffInfoConstants()


class SurfaceSample:
    """
    Information efficiency sampled on a lattice of the discrete plane.

    grid:     list of (x, y, delta) triples, row-major in y then x.
    step:     lattice step.
    residues: optional list with y mod c per cell, for constant-rate dilations.
    """

    def __init__(self, grid: List[Tuple[int, int, float]], step: int,
                 residues: Optional[List[int]] = None):
        self.grid = grid
        self.step = step
        self.residues = residues

    def __len__(self):
        return len(self.grid)

    def __iter__(self):
        return iter(self.grid)

    def minimum(self) -> Tuple[int, int, float]:
        return min(self.grid, key=lambda cell: cell[2])

    def to_csv(self) -> str:
        if self.residues is None:
            rows = ((x, y, format_info(d)) for x, y, d in self.grid)
            return csv_text(Constants.HEADERS["surface"], rows)
        rows = ((x, y, format_info(d), r)
                for (x, y, d), r in zip(self.grid, self.residues))
        return csv_text(Constants.HEADERS["residue"], rows)

    def __str__(self):
        if not self.grid:
            return "SurfaceSample: empty"
        x, y, d = self.minimum()
        return (f"SurfaceSample: {len(self.grid)} cells, step {self.step}, "
                f"minimum {format_info(d)} at ({x},{y})")


class CensusTable:
    """
    Counts of values over an enumerated family of finite sets.

    counts:   value -> number of family members with that value.
    universe: description of the enumerated family.
    """

    def __init__(self, counts: Dict[int, int], universe: str):
        self.counts = dict(sorted((v, c) for v, c in counts.items() if c > 0))
        self.universe = universe

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return self.counts.items()

    def elements(self) -> List[int]:
        """ The multiset as a sorted list with repetitions. """
        return [v for v, c in self.counts.items() for _ in range(c)]

    def to_csv(self) -> str:
        return csv_text(Constants.HEADERS["multiset"], self.counts.items())

    def __getitem__(self, value):
        return self.counts.get(value, 0)

    def __eq__(self, other):
        if not isinstance(other, CensusTable):
            return NotImplemented
        return self.counts == other.counts

    def __str__(self):
        return (f"CensusTable over {self.universe}: {len(self.counts)} values, "
                f"{self.total} members")


class SolutionCensus:
    """
    The number of subsets of a codebook achieving each target.

    For sums the empty subset is counted (under target 0), so subset_total is
    2^k. For products only non-empty subsets are counted.
    """

    def __init__(self, counts: Dict[int, int], subset_total: int):
        self.counts = dict(sorted(counts.items()))
        self.subset_total = subset_total
        self._targets = list(self.counts)

    @property
    def targets(self) -> List[int]:
        """ Reachable targets in ascending order. """
        return self._targets

    def __getitem__(self, target):
        return self.counts.get(target, 0)

    def __len__(self):
        return len(self._targets)

    def reachable(self, lo: int, hi: int) -> List[int]:
        """ Reachable targets t with lo <= t <= hi. """
        return self._targets[bisect_left(self._targets, lo):bisect_right(self._targets, hi)]

    def window(self, lo: int, hi: int) -> Iterable[Tuple[int, int]]:
        return ((t, self.counts[t]) for t in self.reachable(lo, hi))

    def to_csv(self, lo: Optional[int] = None, hi: Optional[int] = None) -> str:
        lo = 0 if lo is None else lo
        if hi is None:
            hi = self._targets[-1] if self._targets else 0
        return csv_text(Constants.HEADERS["census"], self.window(lo, hi))

    def __str__(self):
        return (f"SolutionCensus: {self.subset_total} subsets, "
                f"{len(self._targets)} reachable targets")


class DensityResult(NamedTuple):
    """ Compression count c, density c/n and decay n/c (None when c = 0). """
    c: int
    d: float
    decay: Optional[float]

    def __str__(self):
        decay = "absent" if self.decay is None else format_info(self.decay)
        return f"c = {self.c}, d = {format_info(self.d)}, decay = {decay}"

# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Partitioned enumerations on a process pool.

MergeCensus:  the subset-sum census of a codebook, split over the high
              entries and merged per target.
MergeSearch:  brute-force SB-XOR search, split over the high part of the
              selection mask.

Work is split into contiguous blocks and merged in block order, so the
result does not depend on the number of workers.
"""

import datetime
import sys
import time
from collections import Counter
from typing import List, Optional, Sequence, Tuple

import numpy as np
import multiprocess

from .numeric import subset_values
from .objects import Codebook, SbxorInstance
from .options import SolutionCensus, resolve_options
from .xor import LOW_BITS, search_partition
from .__init__ import __version__


def timeStamp(inTime=None):
    if inTime is None:
        inTime = time.time()
    return str(datetime.datetime.fromtimestamp(inTime).strftime('%Y-%m-%d %H:%M:%S'))


def _blocks(total: int, parts: int) -> List[Tuple[int, int]]:
    """ [lo, hi) blocks covering range(total), at most `parts` of them. """
    parts = max(1, min(parts, total))
    size = -(-total // parts)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _census_block(low: Sequence[int], high: Sequence[int], lo: int, hi: int):
    """ Target counts of all selections whose high mask lies in [lo, hi). """
    table = subset_values(low)
    offsets = subset_values(high)[lo:hi]
    counts: Counter = Counter()
    for off in offsets.tolist():
        targets, n = np.unique(table + off, return_counts=True)
        counts.update(dict(zip(targets.tolist(), n.tolist())))
    return dict(counts)


def _search_block(inst: SbxorInstance, lo: int, hi: int) -> Optional[int]:
    return search_partition(inst, lo, hi)


class MergeBase:
    """ A spawn-context pool of numOfThreads workers. """

    numOfThreads = 2
    ctx = multiprocess.get_context('spawn')

    def __init__(self, options=None):
        self.options = resolve_options(options)
        self.numOfThreads = self.options.num_workers
        self.runTime = None

    def log(self, message: str) -> None:
        if self.options.verbose and self.ctx.current_process().name == "MainProcess":
            print(f"{timeStamp()}   {message}", file=sys.stderr)

    def _map(self, function, jobs):
        assert self.numOfThreads > 0
        startTime = time.time()
        if self.numOfThreads == 1 or len(jobs) == 1:
            results = [function(*job) for job in jobs]
        else:
            with self.ctx.Pool(self.numOfThreads) as pool:
                results = pool.starmap(function, jobs)
        self.runTime = time.time() - startTime
        return results


class MergeCensus(MergeBase):
    """ Subset-sum census of a codebook on numOfThreads processes. """

    def __init__(self, codebook: Codebook, options=None):
        super().__init__(options)
        self.codebook = codebook

    def run(self) -> SolutionCensus:
        values = list(self.codebook)
        split = max(len(values) - LOW_BITS, 0)
        high, low = values[:split], values[split:]
        jobs = [(low, high, lo, hi) for lo, hi in _blocks(1 << len(high), self.numOfThreads)]
        self.log(f"diffinfo {__version__}: census of {len(values)} entries, "
                 f"{len(jobs)} blocks on {self.numOfThreads} workers")
        merged: Counter = Counter()
        for part in self._map(_census_block, jobs):
            merged.update(part)
        self.log(f"census finished in {self.runTime:.2f} s, {len(merged)} targets")
        return SolutionCensus(dict(merged), 1 << len(values))


class MergeSearch(MergeBase):
    """ Brute-force SB-XOR search on numOfThreads processes. """

    def __init__(self, instance: SbxorInstance, options=None):
        super().__init__(options)
        self.instance = instance

    def run(self) -> Optional[int]:
        """ The smallest solving mask, or None. """
        highs = 1 << max(self.instance.n - LOW_BITS, 0)
        jobs = [(self.instance, lo, hi) for lo, hi in _blocks(highs, self.numOfThreads)]
        self.log(f"diffinfo {__version__}: SB-XOR search over {self.instance.n} rows, "
                 f"{len(jobs)} blocks on {self.numOfThreads} workers")
        found = self._map(_search_block, jobs)
        # blocks are ordered, so the first hit is the smallest mask
        return next((mask for mask in found if mask is not None), None)


def parallel_xor_search(inst: SbxorInstance, options=None) -> Optional[int]:
    return MergeSearch(inst, options).run()

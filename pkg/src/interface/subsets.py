# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Subset Sum, Subset Product and Subset Sum mod 2 over codebooks.

A codebook is an ordered list of distinct naturals; a selection is a
characteristic string over its positions. Position i of a scale-free
codebook holds a number drawn uniformly from [0, 2^i], so the codebook is
a randomized version of the template [2^0, 2^1, ...] in which every target
has exactly one binary solution.

Conventions: the empty selection is a witness for sum target 0 and for
parity target 0; product witnesses are never empty.
"""

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, nat, require, require_budget
from .numeric import bit_scale, isqrt, subset_values
from .objects import CharString, Codebook, FinSet, SubsetProblem
from .options import SolutionCensus, SubsetOp, resolve_options
from .utils.rand import SplitMix64


def canonical_codebook(k: int) -> Codebook:
    k = nat(k, "k")
    return Codebook([1 << i for i in range(k)], k)


def gen_scale_free(k: int, seed: int = 0) -> Codebook:
    """ Entry i uniform in [0, 2^i], redrawn while it repeats an earlier entry. """
    k = nat(k, "k")
    require(k >= 1, "A scale-free codebook needs k >= 1.")
    rng = SplitMix64(seed)
    entries: List[int] = []
    used = set()
    for i in range(k):
        e = rng.interval(0, 1 << i)
        while e in used:
            e = rng.interval(0, 1 << i)
        used.add(e)
        entries.append(e)
    return Codebook(entries, k)


def codebook_scales(cb: Codebook) -> List[Optional[int]]:
    """ Leading-bit position of every entry; None for an entry 0. """
    return [bit_scale(e) for e in cb]


def scale_deficits(cb: Codebook) -> List[Optional[int]]:
    """ Scale of each entry minus the scale i of its template entry 2^i. """
    return [None if e == 0 else bit_scale(e) - i for i, e in enumerate(cb)]


def _selection(cb: Codebook, cs: CharString) -> List[int]:
    if cs.length != len(cb):
        raise DomainError(f"Selection length {cs.length} differs from codebook length {len(cb)}.")
    return [cb[i] for i in cs.indices()]


def select_by_charstring(cb: Codebook, cs: CharString) -> Tuple[FinSet, int]:
    """ The entries at the set positions of cs, and their sum. """
    chosen = _selection(cb, cs)
    return FinSet(chosen), sum(chosen)


def evaluate(problem: SubsetProblem, cs: CharString) -> Optional[int]:
    """ op-value of a selection; None for the empty product. """
    chosen = _selection(problem.codebook, cs)
    if problem.op == SubsetOp.sum:
        return sum(chosen)
    if problem.op == SubsetOp.parity:
        return sum(chosen) % 2
    return math.prod(chosen) if chosen else None


def check(problem: SubsetProblem, cs: CharString) -> bool:
    return evaluate(problem, cs) == problem.target


def _witness(n: int, indices) -> CharString:
    return CharString.from_indices(indices, n)


def _mask_indices(mask: int) -> List[int]:
    return [j for j in range(mask.bit_length()) if (mask >> j) & 1]


def _mitm_sum(values: Sequence[int], target: int) -> Optional[List[int]]:
    """
    Meet in the middle: all sums of the low half against all sums of the
    high half. Returns the positions of the witness with the smallest high
    part, and within it the smallest low part.
    """
    if target > sum(values):
        return None
    half = len(values) // 2
    low, high = list(values[:half]), list(values[half:])
    low_sums = subset_values(low)
    high_sums = subset_values(high)
    if low_sums.dtype == object or high_sums.dtype == object:
        table = {}
        for m, s in enumerate(low_sums.tolist()):
            table.setdefault(s, m)
        for hm, s in enumerate(high_sums.tolist()):
            lm = table.get(target - s)
            if lm is not None:
                return _mask_indices(lm) + [half + j for j in _mask_indices(hm)]
        return None
    # smallest low mask first among equal sums
    order = np.argsort(low_sums, kind="stable")
    ordered = low_sums[order]
    need = target - high_sums
    pos = np.searchsorted(ordered, need)
    hit = pos < ordered.size
    hit[hit] = ordered[pos[hit]] == need[hit]
    found = np.flatnonzero(hit)
    if found.size == 0:
        return None
    hm = int(found[0])
    lm = int(order[pos[hm]])
    return _mask_indices(lm) + [half + j for j in _mask_indices(hm)]


def _product_search(values: Sequence[int], target: int) -> Optional[List[int]]:
    """ Depth-first search over the entries that divide target. """
    candidates = [i for i, e in enumerate(values) if e >= 1 and target % e == 0]
    chosen: List[int] = []

    def descend(start: int, rest: int) -> bool:
        if rest == 1 and chosen:
            return True
        for pos in range(start, len(candidates)):
            e = values[candidates[pos]]
            if rest % e == 0:
                chosen.append(candidates[pos])
                if descend(pos + 1, rest // e):
                    return True
                chosen.pop()
        return False

    return list(chosen) if descend(0, target) else None


def _product_candidates(values: Sequence[int], target: int) -> int:
    if target == 0:
        return 0
    return sum(1 for e in values if e >= 1 and target % e == 0)


def solve(problem: SubsetProblem, options=None) -> Optional[CharString]:
    """
    A selection whose op-value equals the target, or None.

    Sums are searched by meet in the middle (up to Options.mitm_bound
    entries). Products only involve entries dividing the target, and the
    number of those is bounded by Options.solve_bound.
    """
    options = resolve_options(options)
    values = list(problem.codebook)
    n, target = len(values), problem.target
    if problem.op == SubsetOp.sum:
        require_budget(n, options.mitm_bound, "solve(sum)")
        indices = _mitm_sum(values, target)
    elif problem.op == SubsetOp.parity:
        require_budget(n, options.solve_bound, "solve(parity)")
        if target > 1:
            indices = None
        elif target == 0:
            indices = []
        else:
            indices = next(([i] for i, e in enumerate(values) if e % 2 == 1), None)
    else:
        require_budget(_product_candidates(values, target), options.solve_bound, "solve(product)")
        if target == 0:
            indices = [values.index(0)] if 0 in values else None
        else:
            indices = _product_search(values, target)
    if indices is None:
        return None
    witness = _witness(n, indices)
    if not check(problem, witness):
        raise RuntimeError(f"solve produced an invalid witness {witness} for {problem}.")
    return witness


def census(cb: Codebook, op=SubsetOp.sum, options=None) -> SolutionCensus:
    """
    Number of selections reaching every target. Sums and parities count all
    2^k selections (the empty one under target 0); products count the
    2^k - 1 non-empty ones.
    """
    options = resolve_options(options)
    op = SubsetOp(op)
    values = list(cb)
    require_budget(len(values), options.census_bound, "census")
    if options.num_workers > 1 and op == SubsetOp.sum:
        from .concurrent import MergeCensus
        return MergeCensus(cb, options).run()
    if op == SubsetOp.product:
        table = subset_values(values, "product")[1:]
        total = table.size
    else:
        table = subset_values(values)
        if op == SubsetOp.parity:
            table = table % 2
        total = table.size
    targets, counts = np.unique(table, return_counts=True)
    return SolutionCensus(dict(zip((int(t) for t in targets), counts.tolist())), total)


def interval_lengths(c: SolutionCensus, lo: int, hi: int) -> List[int]:
    """ Gaps between consecutive reachable targets in [lo, hi]. """
    if lo > hi:
        raise DomainError(f"Empty interval [{lo}, {hi}].")
    reach = c.reachable(lo, hi)
    return [b - a for a, b in zip(reach, reach[1:])]


def fractal_density(c: SolutionCensus, n: int) -> float:
    """
    Fraction of 1..n that is a reachable target. Target 0 is excluded even
    though the empty selection of a sum census always reaches it.
    """
    n = nat(n, "n")
    require(n >= 1, "fractal_density needs n >= 1.")
    return len(c.reachable(1, n)) / n


def mean_solutions(c: SolutionCensus) -> float:
    """ Average number of selections per reachable target. """
    require(len(c) > 0, "The census has no reachable target.")
    return c.subset_total / len(c)


def _divisors_between(n: int, lo: int, hi: int) -> List[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(d for d in set(small + [n // d for d in small]) if lo <= d <= hi)


def distinct_factorization(n: int) -> Optional[FinSet]:
    """
    A set of distinct factors from {2, ..., n - 1} whose product is n: the
    Subset Product problem on the dense codebook {2..n-1}, searched over the
    divisors of n only.
    """
    n = nat(n, "n")
    if n < 4:
        return None
    divisors = _divisors_between(n, 2, n - 1)
    indices = _product_search(divisors, n)
    return None if indices is None else FinSet(divisors[i] for i in indices)


def is_composite(n: int) -> bool:
    """
    Composite-ness through Subset Product. Only a prime square p^2 has no
    factorization into distinct factors, so perfect squares are accepted
    directly.
    """
    n = nat(n, "n")
    if n < 4:
        return False
    r = isqrt(n)
    return r * r == n or distinct_factorization(n) is not None

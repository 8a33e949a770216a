# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Subset Bitwise XOR (SB-XOR).

Given n distinct bit strings of length k and a target t, is there a
non-empty selection of the strings whose componentwise XOR is t?

The same fold is multiple-mutual-key (MMK) encryption: a message XOR-ed
with a chain of one-time pads. Absorbtion re-encodes an instance so that
its hidden selection folds to any chosen message.
"""

import sys
import time
from functools import reduce
from operator import xor as _bxor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, nat, require, require_budget
from .objects import BitVector, SbxorInstance
from .options import resolve_options
from .utils.rand import SplitMix64

# rows of the lookup table in brute-force search
LOW_BITS = 20


def xor_fold(rows: Sequence[BitVector]) -> BitVector:
    rows = list(rows)
    if not rows:
        raise DomainError("The XOR fold of an empty selection is undefined.")
    return reduce(_bxor, rows, BitVector.zeros(rows[0].length))


def hamming(a: BitVector, b: BitVector) -> int:
    return (a ^ b).weight()


def gen_instance(n: int, k: int, seed: int = 0) -> SbxorInstance:
    """
    n rows of k bits, read from one SplitMix64 stream row after row, then an
    n-bit selection; the target is the fold of the selected rows. A row that
    repeats an earlier row is drawn again, as is an all-zero selection.
    """
    n, k = nat(n, "n"), nat(k, "k")
    require(n >= 1 and k >= 1, "An instance needs n >= 1 rows of k >= 1 bits.")
    if n > 1 << k:
        raise DomainError(f"There are no {n} distinct rows of {k} bits.")
    rng = SplitMix64(seed)
    rows: List[BitVector] = []
    seen = set()
    while len(rows) < n:
        v = rng.bits(k)
        if v not in seen:
            seen.add(v)
            rows.append(BitVector(v, k))
    sel = rng.bits(n)
    while sel == 0:
        sel = rng.bits(n)
    selection = BitVector(sel, n)
    target = xor_fold(rows[i] for i in selection.indices())
    return SbxorInstance(rows, target, selection)


def gen_canonical(n: int, seed: int = 0) -> SbxorInstance:
    """ n rows of n bits and an n-bit selection from a stream of n(n + 1) bits. """
    n = nat(n, "n")
    require(n >= 2, "Canonical instances need n >= 2.")
    return gen_instance(n, n, seed)


def check(inst: SbxorInstance, sel: BitVector) -> bool:
    """ True iff sel is non-empty and its rows fold to the target. """
    chosen = inst.selected_rows(sel)
    return bool(chosen) and xor_fold(chosen) == inst.target


def _low_table(rows: Sequence[int], width: int) -> np.ndarray:
    table = np.zeros(1, dtype=np.uint64)
    for r in rows[:width]:
        table = np.concatenate((table, table ^ np.uint64(r)))
    return table


def search_partition(inst: SbxorInstance, high_lo: int, high_hi: int) -> Optional[int]:
    """
    Smallest selection mask (bit j for row j) whose high part lies in
    [high_lo, high_hi), or None. Rows below LOW_BITS are looked up in a
    table of all their folds.
    """
    values = [r.value for r in inst.rows]
    target = inst.target.value
    width = min(len(values), LOW_BITS)
    table = _low_table(values, width)
    high = values[width:]
    for hm in range(high_lo, high_hi):
        acc = 0
        for j in range(len(high)):
            if (hm >> j) & 1:
                acc ^= high[j]
        hits = np.flatnonzero(table == np.uint64(target ^ acc))
        for lm in hits[:2]:
            mask = (hm << width) | int(lm)
            if mask:
                return mask
    return None


def _gray_search(inst: SbxorInstance) -> Optional[int]:
    values = [r.value for r in inst.rows]
    target = inst.target.value
    acc, mask = 0, 0
    for i in range(1, 1 << len(values)):
        j = (i & -i).bit_length() - 1
        acc ^= values[j]
        mask ^= 1 << j
        if acc == target:
            return mask
    return None


def mask_selection(inst: SbxorInstance, mask: int) -> BitVector:
    return BitVector.from_indices([j for j in range(inst.n) if (mask >> j) & 1], inst.n)


def solve_bruteforce(inst: SbxorInstance, options=None) -> Optional[BitVector]:
    """ Exhaustive search over the 2^n selections. """
    options = resolve_options(options)
    require_budget(inst.n, options.bruteforce_bound, "solve_bruteforce")
    if inst.k > 64:
        mask = _gray_search(inst)
    elif options.num_workers > 1:
        from .concurrent import parallel_xor_search
        mask = parallel_xor_search(inst, options)
    else:
        mask = search_partition(inst, 0, 1 << max(inst.n - LOW_BITS, 0))
    if mask is None:
        return None
    sel = mask_selection(inst, mask)
    if not check(inst, sel):
        raise RuntimeError(f"solve_bruteforce produced an invalid selection {sel}.")
    return sel


def _matrix(inst: SbxorInstance) -> np.ndarray:
    """ Augmented k x (n + 1) system: column j is row j of the instance. """
    m = np.zeros((inst.k, inst.n + 1), dtype=np.uint8)
    for j, row in enumerate(inst.rows):
        m[:, j] = row.bits
    m[:, inst.n] = inst.target.bits
    return m


def _rref(m: np.ndarray, ncols: int) -> Tuple[np.ndarray, List[int]]:
    """ Reduced row echelon form over GF(2), pivots searched in the first ncols columns. """
    r = m.copy()
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        if row == r.shape[0]:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        p = row + int(nz[0])
        if p != row:
            r[[row, p]] = r[[p, row]]
        others = np.flatnonzero(r[:, col])
        others = others[others != row]
        r[others] ^= r[row]
        pivots.append(col)
        row += 1
    return r, pivots


def solve_gf2(inst: SbxorInstance) -> Optional[BitVector]:
    """
    Gaussian elimination over GF(2). A zero target needs a non-trivial
    combination, which exists iff the rows are linearly dependent.
    """
    n = inst.n
    r, pivots = _rref(_matrix(inst), n)
    rank = len(pivots)
    if r[rank:, n].any():
        return None
    free = [j for j in range(n) if j not in pivots]
    x = np.zeros(n, dtype=np.uint8)
    if not inst.target:
        if not free:
            return None
        x[free[0]] = 1
    for i, col in enumerate(pivots):
        x[col] = (int(r[i, n]) + int(r[i, free].astype(int) @ x[free])) % 2
    sel = BitVector.from_bits(int(b) for b in x)
    if not check(inst, sel):
        raise RuntimeError(f"solve_gf2 produced an invalid selection {sel}.")
    return sel


def mmk_encrypt(keys: Sequence[BitVector], message: BitVector) -> BitVector:
    """ XOR the message with every key; no keys leaves it unchanged. """
    return reduce(_bxor, keys, message)


def mmk_decrypt(keys: Sequence[BitVector], cipher: BitVector) -> BitVector:
    return mmk_encrypt(keys, cipher)


def absorb(inst: SbxorInstance, message: BitVector, seed: int = 0) -> SbxorInstance:
    """
    Re-encode inst so that its hidden selection folds to message: for every
    column where target and message differ, one selected row chosen by the
    PRNG gets that column flipped. Rows whose flip would duplicate another
    row are not chosen.
    """
    sel = inst.hidden_selection
    if sel is None:
        raise DomainError("Absorbtion needs an instance with a hidden selection.")
    if message.length != inst.k:
        raise DomainError(f"Message length {message.length} differs from row length {inst.k}.")
    rng = SplitMix64(seed)
    rows = list(inst.rows)
    selected = sel.indices()
    for col in (inst.target ^ message).indices():
        if not selected:
            raise DomainError("No selected row can absorb the message.")
        present = set(rows)
        movable = [i for i in selected if rows[i].flip(col) not in present]
        if not movable:
            raise DomainError(f"Every flip in column {col} would duplicate a row.")
        i = rng.choice(movable)
        rows[i] = rows[i].flip(col)
    return SbxorInstance(rows, message, sel)


def benchmark(ns: Sequence[int], seed: int = 0, options=None) -> List[Tuple[int, float, float]]:
    """
    Wall-clock seconds of solve_bruteforce and solve_gf2 on one canonical
    instance per n. The numbers are reported, never asserted.
    """
    options = resolve_options(options)
    out = []
    for n in ns:
        inst = gen_canonical(n, seed)
        start = time.perf_counter()
        solve_bruteforce(inst, options)
        mid = time.perf_counter()
        solve_gf2(inst)
        end = time.perf_counter()
        out.append((n, mid - start, end - mid))
        if options.verbose:
            print(f"n = {n}: bruteforce {mid - start:.5f} s, gf2 {end - mid:.5f} s", file=sys.stderr)
    return out

# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Entropy and information efficiency of AND, OR and XOR on uniformly random
input.

Every mode combines m input words of w bits componentwise:

  bit      m = 2, w = 1
  chain    m = k, w = 1
  bitwise  m = 2, w = k
  set      m = n, w = k

An output bit is 1 with probability 1/2^m (AND), 1 - 1/2^m (OR) or 1/2
(XOR), and the output bits are independent, so H = w h(p) and the
efficiency is H minus the m w input bits.
"""

import sys
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy import stats

from .errors import nat, require
from .numeric import binary_entropy
from .options import LogicMode, LogicOp


class EntropyRow(NamedTuple):
    H: float
    delta: float


def _shape(mode: LogicMode, k: int, n: int) -> Tuple[int, int]:
    if mode == LogicMode.bit:
        return 2, 1
    if mode == LogicMode.chain:
        return k, 1
    if mode == LogicMode.bitwise:
        return 2, k
    return n, k


def _one_probability(op: LogicOp, m: int) -> float:
    if op == LogicOp.AND:
        return 0.5 ** m
    if op == LogicOp.OR:
        return 1.0 - 0.5 ** m
    return 0.5


def logic_entropy(op: LogicOp, mode: LogicMode, k: int = 1, n: int = 2) -> EntropyRow:
    """ Closed-form output entropy H and efficiency H - (input bits). """
    op, mode = LogicOp(op), LogicMode(mode)
    k, n = nat(k, "k"), nat(n, "n")
    require(k >= 1 and n >= 1, "Word length k and word count n must be at least 1.")
    m, w = _shape(mode, k, n)
    h = w * binary_entropy(_one_probability(op, m))
    return EntropyRow(h, h - m * w)


def _reduce(op: LogicOp, words: np.ndarray) -> np.ndarray:
    if op == LogicOp.AND:
        return np.bitwise_and.reduce(words, axis=1)
    if op == LogicOp.OR:
        return np.bitwise_or.reduce(words, axis=1)
    return np.bitwise_xor.reduce(words, axis=1)


def monte_carlo_entropy(op: LogicOp, mode: LogicMode, k: int = 1, n: int = 2,
                        trials: int = 10 ** 6, seed: int = 0, verbose: bool = False) -> float:
    """
    Empirical output entropy over `trials` uniform inputs. Each output column
    is measured on its own and the column entropies are summed.
    """
    op, mode = LogicOp(op), LogicMode(mode)
    m, w = _shape(mode, nat(k, "k"), nat(n, "n"))
    require(trials >= 1, "Monte Carlo estimation needs at least one trial.")
    rng = np.random.default_rng(seed)
    words = rng.integers(0, 2, size=(trials, m, w), dtype=np.uint8)
    out = _reduce(op, words)
    ones = out.sum(axis=0, dtype=np.int64)
    total = sum(float(stats.entropy([trials - c, c], base=2)) for c in ones.tolist())
    if verbose:
        print(f"{op.value} {mode.value}: {trials} trials, H = {total:.6f}", file=sys.stderr)
    return total


def entropy_table(ks: Sequence[int] = (1, 2, 4, 8, 16), n: int = 3) -> List[Tuple]:
    """ Rows (op, mode, k, n, H, delta) over every operation and mode. """
    rows = []
    for op in LogicOp:
        rows.append((op.value, LogicMode.bit.value, 1, 2) + tuple(logic_entropy(op, LogicMode.bit)))
        for k in ks:
            for mode in (LogicMode.chain, LogicMode.bitwise, LogicMode.set):
                words = n if mode == LogicMode.set else (k if mode == LogicMode.chain else 2)
                rows.append((op.value, mode.value, k, words) + tuple(logic_entropy(op, mode, k, n)))
    return rows

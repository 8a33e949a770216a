# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Exact integer arithmetic and the information measures built on it.

Naturals are Python integers and never pass through floating point; only
InfoValues (base-2 logarithms, in bits) are doubles.
"""

import math
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from .errors import DomainError, nat, require
from .options import Literals
from .utils.utility import Constants


def binom(n: int, k: int) -> int:
    """ Binomial coefficient; 0 when k > n. """
    return math.comb(nat(n, "n"), nat(k, "k"))


def isqrt(n: int) -> int:
    """ Largest r with r * r <= n. """
    return math.isqrt(nat(n, "n"))


def iroot(n: int, e: int) -> int:
    """ Largest r with r ** e <= n. """
    n, e = nat(n, "n"), nat(e, "e")
    require(e >= 1, "Root exponent must be at least 1.")
    if e == 1 or n < 2:
        return n
    if e == 2:
        return math.isqrt(n)
    lo, hi = 1, 1 << (n.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def info(n: int) -> float:
    """ I(n) = log2 n, with I(0) = I(1) = 0. """
    n = nat(n, "n")
    return 0.0 if n <= 1 else math.log2(n)


def hartley(m: int) -> float:
    """ Information of a choice among m equiprobable messages. """
    m = nat(m, "m")
    require(m >= 1, "A choice needs at least one message.")
    return info(m)


def scale(n: int) -> Optional[int]:
    """ Number of bits needed to index n objects; None for n = 0. """
    n = nat(n, "n")
    return None if n == 0 else (n - 1).bit_length()


def bit_scale(n: int) -> Optional[int]:
    """ Position of the leading bit of n; None for n = 0. """
    n = nat(n, "n")
    return None if n == 0 else n.bit_length() - 1


def delta(output: int, inputs: Iterable[int]) -> float:
    """ Information efficiency: output information minus input information. """
    return info(output) - sum(info(x) for x in inputs)


def shannon_entropy(probs: Sequence[float]) -> float:
    """
    Entropy in bits of a finite distribution. Entries must lie in [0, 1] and
    sum to 1 within the distribution tolerance; 0 log 0 counts as 0.
    """
    p = np.asarray(probs, dtype=float)
    require(p.ndim == 1 and p.size > 0, "A distribution needs at least one probability.")
    require(bool(np.all((p >= 0) & (p <= 1))), f"Probabilities must lie in [0, 1], got {list(probs)}.")
    require(abs(p.sum() - 1.0) <= Constants.DIST_TOLERANCE,
            f"Probabilities must sum to 1, got {p.sum()!r}.")
    return float(stats.entropy(p, base=2))


def binary_entropy(p: float) -> float:
    return shannon_entropy((p, 1.0 - p))


def _stirling2(n: int, k: int) -> int:
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def combinatorial_counts(kind: str, n: int, k: Optional[int] = None) -> int:
    """
    catalan:   balanced bracketings of n pairs, binom(2n, n) / (n + 1)
    stirling2: partitions of an n-set into k non-empty blocks
    bell:      all partitions of an n-set, the sum of stirling2(n, k) over k
    """
    n = nat(n, "n")
    if kind == Literals.catalan:
        return math.comb(2 * n, n) // (n + 1)
    if kind == Literals.stirling2:
        if k is None:
            raise DomainError("stirling2 needs the number of blocks k.")
        return _stirling2(n, nat(k, "k"))
    if kind == Literals.bell:
        return sum(_stirling2(n, j) for j in range(n + 1))
    raise DomainError(f"Unknown count '{kind}'; expected catalan, stirling2 or bell.")


def delta_arith(op: str, x: int, y: Optional[int] = None) -> float:
    """ Information efficiency of addition, multiplication and their self-versions. """
    x = nat(x, "x")
    require(x >= 1, "Operands must be at least 1.")
    if op in (Literals.add, Literals.mul):
        if y is None:
            raise DomainError(f"'{op}' needs a second operand.")
        y = nat(y, "y")
        require(y >= 1, "Operands must be at least 1.")
        out = x + y if op == Literals.add else x * y
        return info(out) - info(x) - info(y)
    if op == Literals.self_add:
        return info(2 * x) - info(x)
    if op == Literals.self_mul:
        return info(x * x) - info(x)
    raise DomainError(f"Unknown operation '{op}'; expected add, mul, self_add or self_mul.")


def assoc_delta(op: str, x: int, y: int, z: int) -> Tuple[float, float]:
    """
    Efficiency of (x op y) op z and of x op (y op z), each summed over its two
    steps. Both bracketings compute the same number, so they must agree.
    """
    if op not in (Literals.add, Literals.mul):
        raise DomainError(f"Associativity is checked for add and mul, not '{op}'.")
    fn = (lambda a, b: a + b) if op == Literals.add else (lambda a, b: a * b)
    left = delta_arith(op, x, y) + delta_arith(op, fn(x, y), z)
    right = delta_arith(op, y, z) + delta_arith(op, x, fn(y, z))
    return left, right


def zint_index(z: int) -> int:
    """ Bijection Z -> N: 0, 1, -1, 2, -2, ... go to 0, 2, 1, 4, 3, ... """
    if not isinstance(z, int):
        raise TypeError(f"z must be an integer, not '{type(z).__name__}'.")
    return 2 * z if z >= 0 else -2 * z - 1


def zint_value(n: int) -> int:
    n = nat(n, "n")
    return n // 2 if n % 2 == 0 else -(n + 1) // 2


def typical_fraction(n: int) -> float:
    """ log2 binom(n, n/2) / n; tends to 1 from below. """
    n = nat(n, "n")
    require(n >= 1, "n must be at least 1.")
    return info(math.comb(n, n // 2)) / n


def subset_values(values: Sequence[int], op: str = "sum") -> np.ndarray:
    """
    The sum (or product) of every subset of `values`, as an array of length
    2^len(values): entry m belongs to the subset holding values[j] for every
    bit j set in m. Entry 0 is the empty subset.

    int64 is used when no result can overflow it, Python integers otherwise.
    """
    values = [nat(v, "value") for v in values]
    if op == "sum":
        identity, bound = 0, sum(values)
    elif op == "product":
        identity, bound = 1, math.prod(v for v in values if v)
    else:
        raise DomainError(f"Unknown subset operation '{op}'.")
    dtype = np.int64 if bound < 1 << 62 else object
    out = np.array([identity], dtype=dtype)
    for v in values:
        out = np.concatenate((out, out + v if op == "sum" else out * v))
    return out

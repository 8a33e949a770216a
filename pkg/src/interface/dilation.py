# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Elastic dilations of the discrete plane.

A dilation with rate r sends (x, y) to (x r(x) + y mod r(x), y div r(x)):
column x is stretched into r(x) columns while its rows are compressed by the
same factor. For a constant rate this is a bijection of N^2; for growing
rates the image leaves gaps between the stretched columns.
"""

import math
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import DomainError, nat, require, require_budget
from .numeric import info, iroot
from .objects import DilationSpec, Point
from .options import RateKind, SurfaceSample, resolve_options
from .pairing import PointLike, as_point, lattice, pair, unpair


def _rate(spec: DilationSpec, x: int) -> int:
    r = spec.rate_at(x)
    if r == 0:
        raise DomainError(f"The rate {spec} vanishes at column {x}.")
    return r


def reference_dilate(c: int, p: PointLike) -> Tuple[Fraction, Fraction]:
    """ The exact reference dilation (c x, y / c). """
    c = nat(c, "c")
    require(c >= 1, "The rate constant c must be at least 1.")
    x, y = as_point(p)
    return Fraction(c * x), Fraction(y, c)


def dilate(spec: DilationSpec, p: PointLike) -> Point:
    x, y = as_point(p)
    if spec.reference:
        raise DomainError("Reference dilations leave N^2; use reference_dilate.")
    r = _rate(spec, x)
    return Point(x * r + y % r, y // r)


def undilate(spec: DilationSpec, q: PointLike) -> Optional[Point]:
    """ The preimage of q under dilate, or None when q is not in the image. """
    cx, cy = as_point(q)
    if spec.rate == RateKind.constant:
        x, d = divmod(cx, spec.c)
        return Point(x, cy * spec.c + d)
    # column x covers [c x^(k+1), c x^(k+1) + c x^k); these ranges increase with x
    x = iroot(cx // spec.c, spec.k + 1)
    if x == 0:
        return None
    r = spec.rate_at(x)
    d = cx - x * r
    if d >= r:
        return None
    return Point(x, cy * r + d)


def induced_endo(spec: DilationSpec, n: int) -> int:
    return pair(dilate(spec, unpair(n)))


def dilation_efficiency(spec: DilationSpec, p: PointLike) -> float:
    x, y = as_point(p)
    if x == 0 or y == 0:
        raise DomainError(f"Dilation efficiency needs x, y >= 1, got ({x},{y}).")
    return info(pair(dilate(spec, (x, y)))) - info(x) - info(y)


def reference_ratio(c: int, h: Union[int, Fraction]) -> float:
    """
    log2 of the limit of pair(c x, h x / c) / pair(x, h x) for large x,
    which is (c^2 + h)^2 / (c^2 (1 + h)^2).
    """
    c = nat(c, "c")
    h = Fraction(h)
    require(c >= 1, "The rate constant c must be at least 1.")
    require(h > 0, f"The slope h must be positive, got {h}.")
    return math.log2((c * c + h) ** 2 / (c * c * (1 + h) ** 2))


def _rational_pair(x: Fraction, y: Fraction) -> Fraction:
    return (x + y) * (x + y + 1) / 2 + y


def empirical_ratio(c: int, h: Union[int, Fraction], x: int) -> float:
    """ pair(reference_dilate(c, (x, h x))) / pair(x, h x), evaluated exactly. """
    h = Fraction(h)
    x = nat(x, "x")
    require(x >= 1 and h > 0, "empirical_ratio needs x >= 1 and h > 0.")
    y = h * x
    a, b = Fraction(c * x), y / c
    return float(_rational_pair(a, b) / _rational_pair(Fraction(x), y))


def constant_diagonal_lift(c: int) -> float:
    """ Limit of the constant-rate dilation efficiency on the diagonal: log2((c + 1/c)^2 / 2). """
    c = nat(c, "c")
    require(c >= 1, "The rate constant c must be at least 1.")
    return math.log2((c + Fraction(1, c)) ** 2 / 2)


def dilation_surface(spec: DilationSpec, x_max: int, y_max: int, step: int = 1,
                     options=None) -> SurfaceSample:
    """
    dilation_efficiency on a lattice of [1, x_max] x [1, y_max]. Constant rates
    carry the residue y mod c of every cell, which separates the c
    interleaved families of the surface.
    """
    options = resolve_options(options)
    xs, ys = lattice(x_max, y_max, step)
    require_budget(len(xs) * len(ys), options.surface_limit, "dilation_surface")
    grid = [(x, y, dilation_efficiency(spec, (x, y))) for y in ys for x in xs]
    residues = None
    if spec.rate == RateKind.constant:
        residues = [y % spec.c for y in ys for _ in xs]
    return SurfaceSample(grid, step, residues)


def missing_columns(spec: DilationSpec, n: int) -> List[int]:
    """ Columns below n that dilate never reaches from [x0, n] x [0, n]. """
    n = nat(n, "n")
    hit = set()
    for x in range(spec.min_column, n + 1):
        r = _rate(spec, x)
        # y mod r takes every residue once y reaches r - 1
        hit.update(x * r + d for d in range(min(r, n + 1)))
    return [col for col in range(n) if col not in hit]

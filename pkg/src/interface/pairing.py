# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
The Cantor pairing bijection between N^2 and N, taxicab geometry on the
discrete plane, and the information efficiency of pairing.

The pairing function walks the plane along counter-diagonals (taxicab
shells): shell k holds the cells with x + y = k, and the cell (k - y, y) gets
index k(k + 1)/2 + y.
"""

import math
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import DomainError, require, require_budget
from .numeric import info, isqrt, shannon_entropy
from .objects import Point
from .options import SurfaceSample, resolve_options


PointLike = Union[Point, Tuple[int, int]]


def as_point(p: PointLike) -> Point:
    return p if isinstance(p, Point) else Point(*p)


def pair(p: PointLike) -> int:
    x, y = as_point(p)
    return (x + y) * (x + y + 1) // 2 + y


def unpair(z: int) -> Point:
    """ Inverse of pair, by the exact triangular root of z. """
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return Point(w - y, y)


def taxicab(a: PointLike, b: PointLike) -> int:
    a, b = as_point(a), as_point(b)
    return abs(a.x - b.x) + abs(a.y - b.y)


def shell(k: int) -> List[Point]:
    """ The cells at taxicab distance k from the origin, in pairing order. """
    return [Point(k - y, y) for y in range(k + 1)]


def path_entropy(p: PointLike) -> float:
    """
    Entropy of the ascending lattice paths from the origin to p, per step:
    a path takes x right steps and y up steps out of k = x + y.
    """
    x, y = as_point(p)
    k = x + y
    if k == 0:
        raise DomainError("The origin has no ascending path entropy.")
    return shannon_entropy((x / k, y / k))


def pairing_efficiency(p: PointLike) -> float:
    x, y = as_point(p)
    if x == 0 or y == 0:
        raise DomainError(f"Pairing efficiency needs x, y >= 1, got ({x},{y}).")
    return info(pair((x, y))) - info(x) - info(y)


def diagonal_limit() -> float:
    """ Limit of pairing_efficiency(x, x) for large x. """
    return 1.0


def ratio_limit(h: Union[int, Fraction]) -> float:
    """ Limit of pairing_efficiency(x, h x) for large x: log2((1 + h)^2 / 2) - log2 h. """
    h = Fraction(h)
    require(h > 0, f"The slope h must be positive, got {h}.")
    return math.log2((1 + h) ** 2 / (2 * h))


def lattice(x_max: int, y_max: int, step: int, start: int = 1):
    """ Lattice cells of [start, x_max] x [start, y_max], row-major in y then x. """
    require(step >= 1, f"The lattice step must be at least 1, got {step}.")
    xs = range(start, x_max + 1, step)
    ys = range(start, y_max + 1, step)
    return xs, ys


def efficiency_surface(x_max: int, y_max: int, step: int = 1, options=None) -> SurfaceSample:
    options = resolve_options(options)
    xs, ys = lattice(x_max, y_max, step)
    require_budget(len(xs) * len(ys), options.surface_limit, "efficiency_surface")
    grid = [(x, y, pairing_efficiency((x, y))) for y in ys for x in xs]
    return SurfaceSample(grid, step)


def surface_csv(sample: SurfaceSample) -> str:
    return sample.to_csv()

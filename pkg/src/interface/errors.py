# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Exceptions and warnings raised by diffinfo.

All precondition violations are `DomainError`s, which are `ValueError`s, so
callers that only care about bad input can keep catching `ValueError`.
"""

import operator


class DomainError(ValueError):
    """ An operation was called outside of its domain. """


class BudgetError(DomainError):
    """ An exhaustive enumeration would exceed its configured bound. """


class BudgetWarning(RuntimeWarning):
    """ An enumeration passed a soft budget but is allowed to continue. """


def require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def require_budget(size: int, bound: int, what: str) -> None:
    if size > bound:
        raise BudgetError(f"{what}: size {size} exceeds the exhaustive bound {bound}.")


def nat(value, name: str = "value") -> int:
    """ Coerce an integer-like value to a natural number. """
    try:
        value = operator.index(value)
    except TypeError:
        raise TypeError(f"{name} must be an integer, not '{type(value).__name__}'.") from None
    if value < 0:
        raise DomainError(f"{name} must be a natural number, got {value}.")
    return value

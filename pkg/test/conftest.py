# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import pytest

from diffinfo.objects import CharString, Codebook, FinSet, SbxorInstance
from diffinfo.options import Options, SolutionCensus, SubsetOp
from diffinfo.subsets import census
from diffinfo.utils import fixtures


@pytest.fixture
def worked_set() -> FinSet:
    """
    The six-element set used throughout the worked examples.
    """
    return FinSet([1, 4, 6, 8, 10, 11])


@pytest.fixture
def scalefree22() -> Codebook:
    return fixtures.scalefree_codebook()


@pytest.fixture
def scalefree22_charstring() -> CharString:
    return fixtures.scalefree_charstring()


@pytest.fixture(scope="session")
def scalefree22_census() -> SolutionCensus:
    """
    Full sum census of the 22-entry fixture (2^22 subsets), computed once.
    """
    return census(fixtures.scalefree_codebook(), SubsetOp.sum)


@pytest.fixture
def xor3() -> SbxorInstance:
    return fixtures.xor_instance()


@pytest.fixture
def small_options() -> Options:
    """
    Options with tight budgets, for testing the budget checks.
    """
    return Options(theta_warn=100, theta_limit=1000, powerset_bound=6,
                   solve_bound=10, mitm_bound=10, census_bound=10,
                   bruteforce_bound=10, sat_bound=3, surface_limit=50)

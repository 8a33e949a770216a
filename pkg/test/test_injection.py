# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import math
from collections import Counter
from itertools import combinations

import numpy as np
import pytest

from diffinfo import injection
from diffinfo.errors import BudgetError, BudgetWarning, DomainError
from diffinfo.objects import FinSet
from diffinfo.options import ZetaKind
from diffinfo.pairing import pair
from diffinfo.setcodec import combinadic_rank, phi_car_index, phi_car_inv
from diffinfo.utils.rand import SplitMix64


class Test_Zeta:

    @pytest.mark.parametrize("kind, expected", [
        (ZetaKind.cardinality, 6), (ZetaKind.sum, 40), (ZetaKind.product, 21120),
        (ZetaKind.binary, 3410), (ZetaKind.parity, 0)])
    def test_worked_values(self, worked_set: FinSet, kind: ZetaKind, expected: int):
        assert injection.zeta_eval(kind, worked_set) == expected

    def test_empty_set(self):
        with pytest.raises(DomainError):
            injection.zeta_eval(ZetaKind.sum, FinSet())


class Test_SortedInjection:

    @pytest.mark.parametrize("kind, s, expected", [
        (ZetaKind.sum, [0], pair((0, 0))),
        (ZetaKind.sum, [0, 1], pair((1, 0))),
        (ZetaKind.sum, [1], pair((1, 1))),
        (ZetaKind.sum, [0, 2], pair((2, 0))),
        (ZetaKind.sum, [2], pair((2, 1))),
        (ZetaKind.sum, [1, 2], pair((3, 1))),
        (ZetaKind.product, [1, 2], pair((2, 1))),
        (ZetaKind.parity, [2], pair((0, 2))),
        (ZetaKind.binary, [1], pair((2, 0)))])
    def test_values(self, kind: ZetaKind, s, expected: int):
        assert injection.phi_zeta(kind, FinSet(s)) == expected

    def test_sum_of_one(self):
        assert injection.phi_zeta(ZetaKind.sum, FinSet([0, 1])) == 1
        assert injection.phi_zeta(ZetaKind.sum, FinSet([1])) == 4
        assert injection.theta_index(ZetaKind.sum, FinSet([1, 2])) == 1

    def test_cardinality_is_phi_car(self, worked_set: FinSet):
        assert injection.theta_index(ZetaKind.cardinality, worked_set) == 811
        assert injection.phi_zeta(ZetaKind.cardinality, worked_set) == phi_car_index(worked_set) == 334147

    @pytest.mark.parametrize("kind", list(ZetaKind))
    def test_injective(self, kind: ZetaKind):
        census = injection.ThetaCensus(kind)
        sets = [FinSet(c) for k in range(1, 4) for c in combinations(range(10), k)]
        values = [injection.phi_zeta(kind, s, census=census) for s in sets]
        assert len(set(values)) == len(values)

    @pytest.mark.parametrize("kind", list(ZetaKind))
    def test_census_agrees_with_scan(self, kind: ZetaKind):
        census = injection.ThetaCensus(kind)
        for c in combinations(range(6), 2):
            s = FinSet(c)
            assert injection.theta_index(kind, s, census=census) == injection.theta_index(kind, s)

    @pytest.mark.parametrize("kind", list(ZetaKind))
    def test_theta_consistency(self, kind: ZetaKind):
        census = injection.ThetaCensus(kind)
        seen = Counter()
        values = set()
        for n in range(5001):
            s = phi_car_inv(n)
            z = injection.zeta_eval(kind, s)
            assert injection.theta_index(kind, s, census=census) == seen[z]
            seen[z] += 1
            values.add(injection.phi_zeta(kind, s, census=census))
        assert len(values) == 5001

    def test_cardinality_theta_is_colex_rank(self):
        rng = SplitMix64(500)
        colex = {k: sorted(combinations(range(10), k), key=lambda c: c[::-1]) for k in range(1, 5)}
        census = injection.ThetaCensus(ZetaKind.cardinality)
        for _ in range(500):
            k = rng.interval(1, 4)
            elems = set()
            while len(elems) < k:
                elems.add(rng.below(10))
            s = FinSet(elems)
            theta = injection.theta_index(ZetaKind.cardinality, s)
            assert theta == combinadic_rank(s) == colex[k].index(tuple(s))
            assert census.theta(phi_car_index(s)) == theta

    def test_census_kind(self):
        census = injection.ThetaCensus(ZetaKind.product)
        with pytest.raises(DomainError):
            injection.theta_index(ZetaKind.sum, FinSet([2]), census=census)


class Test_Inverse:

    @pytest.mark.parametrize("kind", list(ZetaKind))
    def test_round_trip(self, kind: ZetaKind):
        census = injection.ThetaCensus(kind)
        for k in range(1, 4):
            for c in combinations(range(6), k):
                s = FinSet(c)
                n = injection.phi_zeta(kind, s, census=census)
                assert injection.phi_zeta_inv(kind, n, census=census) == s

    @pytest.mark.parametrize("kind, n, expected", [
        (ZetaKind.sum, 4, [1]),
        (ZetaKind.sum, pair((3, 3)), [0, 3]),
        (ZetaKind.cardinality, 334147, [1, 4, 6, 8, 10, 11]),
        (ZetaKind.binary, pair((3410, 0)), [1, 4, 6, 8, 10, 11])])
    def test_values(self, kind: ZetaKind, n: int, expected):
        assert injection.phi_zeta_inv(kind, n) == FinSet(expected)

    @pytest.mark.parametrize("kind, n", [
        (ZetaKind.sum, pair((1, 2))),
        (ZetaKind.sum, pair((0, 1))),
        (ZetaKind.sum, pair((3, 4))),
        (ZetaKind.binary, pair((0, 0))),
        (ZetaKind.binary, pair((5, 1))),
        (ZetaKind.parity, pair((2, 0))),
        (ZetaKind.product, pair((2, 2)))])
    def test_absent(self, kind: ZetaKind, n: int):
        assert injection.phi_zeta_inv(kind, n) is None


class Test_ThetaCensus:

    def test_snapshot(self):
        census = injection.ThetaCensus(ZetaKind.sum)
        table = census.snapshot(10)
        assert table.counts == {0: 1, 1: 2, 2: 2, 3: 3, 4: 1, 6: 1}
        assert table.total == 10
        assert len(census) == 10

    def test_theta(self):
        census = injection.ThetaCensus(ZetaKind.sum)
        assert [census.theta(i) for i in (3, 8, 9, 13)] == [0, 1, 2, 3]

    def test_limit(self, small_options):
        census = injection.ThetaCensus(ZetaKind.sum, small_options)
        census.extend(1000)
        with pytest.raises(BudgetError):
            census.extend(1001)

    def test_warning(self, small_options):
        s = FinSet([13])
        assert phi_car_index(s) == 104
        with pytest.warns(BudgetWarning):
            theta = injection.theta_index(ZetaKind.sum, s, small_options)
        assert theta == injection.ThetaCensus(ZetaKind.sum).theta(104)

    def test_refusal(self, small_options):
        with pytest.raises(BudgetError):
            injection.theta_index(ZetaKind.sum, FinSet([50]), small_options)


class Test_PowersetDilation:

    @pytest.mark.parametrize("kind, expected", [
        (ZetaKind.sum, [1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 9, 10]),
        (ZetaKind.product, [1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 8, 12, 12, 24, 24]),
        (ZetaKind.parity, [0] * 7 + [1] * 8),
        (ZetaKind.cardinality, [1] * 4 + [2] * 6 + [3] * 4 + [4])])
    def test_multisets(self, kind: ZetaKind, expected):
        table = injection.powerset_dilation(FinSet([1, 2, 3, 4]), kind)
        assert table.elements() == expected
        assert table.total == 15

    def test_binary(self):
        table = injection.powerset_dilation(FinSet([0, 1, 2, 3]), ZetaKind.binary)
        assert table.elements() == list(range(1, 16))

    def test_csv(self):
        text = injection.powerset_dilation(FinSet([1, 2]), ZetaKind.sum).to_csv()
        assert text == "value,count\n1,1\n2,1\n3,1\n"

    def test_budget(self, small_options):
        with pytest.raises(BudgetError):
            injection.powerset_dilation(FinSet(range(7)), ZetaKind.sum, small_options)


class Test_Density:

    def test_full_density(self):
        table = injection.powerset_dilation(FinSet([1, 2, 3, 4]), ZetaKind.sum)
        result = injection.density_census(table, 10)
        assert (result.c, result.d, result.decay) == (10, 1.0, 1.0)

    def test_empty(self):
        result = injection.density_census([], 5)
        assert (result.c, result.d, result.decay) == (0, 0.0, None)

    def test_array(self):
        result = injection.density_census(np.array([0, 1, 1, 5, 7]), 6)
        assert result.c == 2
        assert result.d == pytest.approx(1 / 3)
        assert result.decay == pytest.approx(3.0)

    def test_prime_decay(self):
        n = 10 ** 6
        sieve = np.ones(n + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(n) + 1):
            if sieve[p]:
                sieve[p * p::p] = False
        result = injection.density_census(np.flatnonzero(sieve), n)
        assert result.c == 78498
        assert result.decay == pytest.approx(math.log(n), rel=0.1)

    def test_multiset_table(self):
        assert injection.multiset_table([3, 1, 3]).counts == {1: 1, 3: 2}

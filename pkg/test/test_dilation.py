# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import math
from fractions import Fraction

import pytest

from diffinfo import dilation
from diffinfo.errors import BudgetError, DomainError
from diffinfo.objects import DilationSpec, Point
from diffinfo.options import RateKind
from diffinfo.pairing import pair


SPECS = [DilationSpec.constant(1), DilationSpec.constant(2), DilationSpec.constant(5),
         DilationSpec.linear(1), DilationSpec.linear(3), DilationSpec.polynomial(1, 2),
         DilationSpec.polynomial(2, 3)]


class Test_Spec:

    @pytest.mark.parametrize("kargs", [
        dict(rate=RateKind.constant, c=0),
        dict(rate=RateKind.polynomial, c=1, k=0),
        dict(rate=RateKind.linear, c=1, reference=True)])
    def test_invalid(self, kargs):
        with pytest.raises(DomainError):
            DilationSpec(**kargs)

    def test_rates(self):
        assert DilationSpec.constant(3).rate_at(10) == 3
        assert DilationSpec.linear(2).rate_at(10) == 20
        assert DilationSpec.polynomial(2, 3).rate_at(2) == 16


class Test_Dilate:

    @pytest.mark.parametrize("spec, p, q", [
        (DilationSpec.constant(2), (3, 5), (7, 2)),
        (DilationSpec.constant(1), (4, 9), (4, 9)),
        (DilationSpec.linear(1), (3, 7), (10, 2)),
        (DilationSpec.polynomial(1, 2), (2, 5), (9, 1))])
    def test_values(self, spec: DilationSpec, p, q):
        assert dilation.dilate(spec, p) == Point(*q)
        assert dilation.undilate(spec, q) == Point(*p)

    @pytest.mark.parametrize("spec", SPECS)
    def test_round_trip(self, spec: DilationSpec):
        for x in range(spec.min_column, 30):
            for y in range(30):
                assert dilation.undilate(spec, dilation.dilate(spec, (x, y))) == (x, y)

    @pytest.mark.parametrize("c", [1, 2, 7])
    def test_constant_rate_is_bijective(self, c: int):
        spec = DilationSpec.constant(c)
        for x in range(40):
            for y in range(40):
                assert dilation.dilate(spec, dilation.undilate(spec, (x, y))) == (x, y)

    @pytest.mark.parametrize("spec", SPECS[3:])
    def test_image_gaps(self, spec: DilationSpec):
        hit = {dilation.dilate(spec, (x, y)) for x in range(1, 12) for y in range(40)}
        for q in ((cx, cy) for cx in range(60) for cy in range(4)):
            back = dilation.undilate(spec, q)
            if q in hit:
                assert back is not None
            if back is not None:
                assert dilation.dilate(spec, back) == q

    def test_zero_rate(self):
        with pytest.raises(DomainError):
            dilation.dilate(DilationSpec.linear(1), (0, 3))

    def test_reference(self):
        spec = DilationSpec(RateKind.constant, 2, reference=True)
        with pytest.raises(DomainError):
            dilation.dilate(spec, (3, 4))
        assert dilation.reference_dilate(2, (3, 5)) == (Fraction(6), Fraction(5, 2))

    @pytest.mark.parametrize("n", [0, 1, 17, 334147])
    def test_identity_endo(self, n: int):
        assert dilation.induced_endo(DilationSpec.constant(1), n) == n

    @pytest.mark.parametrize("c", [2, 3, 100])
    def test_induced_endo_is_injective(self, c: int):
        spec = DilationSpec.constant(c)
        values = [dilation.induced_endo(spec, n) for n in range(10 ** 4 + 1)]
        assert len(set(values)) == len(values)


class Test_Columns:

    def test_linear_image(self):
        missing = dilation.missing_columns(DilationSpec.linear(1), 32)
        assert missing == [0, 2, 3, 6, 7, 8, 12, 13, 14, 15, 20, 21, 22, 23, 24, 30, 31]
        assert {14, 15} <= set(missing)

    @pytest.mark.parametrize("cx", [0, 2, 12, 13, 14, 15])
    def test_missing_columns_have_no_preimage(self, cx: int):
        assert dilation.undilate(DilationSpec.linear(1), (cx, 0)) is None

    def test_constant_image_is_full(self):
        assert dilation.missing_columns(DilationSpec.constant(3), 50) == []


class Test_Efficiency:

    def test_diagonal_lift(self):
        x = 10 ** 6
        spec = DilationSpec.constant(2)
        expected = 2 * math.log2(5) - 3
        assert dilation.constant_diagonal_lift(2) == pytest.approx(expected)
        assert abs(dilation.dilation_efficiency(spec, (x, x)) - expected) < 0.01

    @pytest.mark.parametrize("c", [2, 3, 7])
    def test_constant_rate_gains(self, c: int):
        spec = DilationSpec.constant(c)
        coords = range(10 ** 3, 10 ** 6 + 1, 37000)
        assert min(dilation.dilation_efficiency(spec, (x, y)) for x in coords for y in coords) > 0

    @pytest.mark.parametrize("x", [2 ** 8, 2 ** 16, 2 ** 32])
    def test_linear_rate_growth(self, x: int):
        spec = DilationSpec.linear(1)
        assert dilation.dilate(spec, (x, x)) == (x * x, 1)
        assert pair(dilation.dilate(spec, (x, x))) > x ** 4 // 2
        assert dilation.dilation_efficiency(spec, (x, x)) >= 2 * math.log2(x) - 1

    def test_identity_lift(self):
        assert dilation.constant_diagonal_lift(1) == pytest.approx(1.0)

    @pytest.mark.parametrize("c, h", [(2, 1), (3, 2), (2, Fraction(1, 3))])
    def test_reference_ratio(self, c: int, h):
        empirical = dilation.empirical_ratio(c, h, 10 ** 6)
        assert abs(math.log2(empirical) - dilation.reference_ratio(c, h)) < 1e-3

    def test_reference_ratio_value(self):
        assert dilation.reference_ratio(2, 1) == pytest.approx(math.log2(25 / 16))

    def test_axes_excluded(self):
        with pytest.raises(DomainError):
            dilation.dilation_efficiency(DilationSpec.constant(2), (3, 0))


class Test_Surface:

    def test_residues(self):
        sample = dilation.dilation_surface(DilationSpec.constant(2), 4, 4)
        assert len(sample) == 16
        assert sample.residues == [y % 2 for y in range(1, 5) for _ in range(4)]
        assert sample.to_csv().splitlines()[0] == "x,y,delta,residue"

    def test_no_residues(self):
        sample = dilation.dilation_surface(DilationSpec.linear(1), 3, 3)
        assert sample.residues is None
        assert sample.to_csv().splitlines()[0] == "x,y,delta"

    def test_budget(self, small_options):
        with pytest.raises(BudgetError):
            dilation.dilation_surface(DilationSpec.constant(2), 20, 20, options=small_options)

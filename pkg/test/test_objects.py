# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from contextlib import nullcontext

import pytest

from diffinfo.errors import DomainError
from diffinfo.objects import BitVector, CharString, Codebook, FinSet, Point, SubsetProblem
from diffinfo.options import Options, SubsetOp
from diffinfo.utils import fixtures
from diffinfo.utils.utility import Constants


class Test_Options:

    def test_defaults(self):
        o = Options()
        assert (o.seed, o.num_workers, o.verbose) == (0, 1, False)
        assert o.theta_warn == 1 << 20 and o.theta_limit == 1 << 26
        assert o == Options()
        assert "seed=0" in repr(o)

    @pytest.mark.parametrize("kwargs, context", [
        ({"seed": 7, "num_workers": 4}, nullcontext()),
        ({"seed": -1}, pytest.raises(ValueError)),
        ({"num_workers": 0}, pytest.raises(ValueError)),
        ({"sat_bound": 0}, pytest.raises(ValueError)),
        ({"seed": 1.0}, pytest.raises(TypeError)),
        ({"threads": 2}, pytest.raises(TypeError))])
    def test_validation(self, kwargs, context):
        with context:
            o = Options(**kwargs)
            assert all(getattr(o, k) == v for k, v in kwargs.items())

    def test_constants_are_frozen(self):
        with pytest.raises(AttributeError):
            Constants.INFO_DIGITS = 3
        assert Constants.EXIT == {"ok": 0, "precondition": 1, "usage": 2}


class Test_Values:

    def test_finset(self):
        s = FinSet([4, 1, 6])
        assert s == FinSet([1, 4, 6]) and s.elems == (1, 4, 6)
        assert str(s) == "{1,4,6}" and s.max() == 6
        assert FinSet.of_range(3) == FinSet([0, 1, 2])

    @pytest.mark.parametrize("elems, error", [
        ([1, 1], DomainError), ([-1], DomainError), ([1.5], TypeError)])
    def test_finset_errors(self, elems, error):
        with pytest.raises(error):
            FinSet(elems)

    def test_empty_finset(self):
        with pytest.raises(DomainError):
            FinSet().max()

    def test_point(self):
        p = Point(2, 3)
        assert p == (2, 3) and p.shell == 5 and str(p) == "(2,3)"
        with pytest.raises(DomainError):
            Point(-1, 0)

    def test_bitvector(self):
        v = BitVector.from_string("100")
        assert v.value == 4 and v.bits == (1, 0, 0) and v.indices() == [0]
        assert v == BitVector.from_indices([0], 3) == BitVector.from_bits([1, 0, 0])
        assert v.flip(2) == BitVector.from_string("101")
        assert (v ^ BitVector.from_string("110")) == BitVector.from_string("010")
        assert not BitVector.zeros(4) and len(BitVector.zeros(4)) == 4

    @pytest.mark.parametrize("build", [
        lambda: BitVector.from_string("102"),
        lambda: BitVector(8, 3),
        lambda: BitVector.from_indices([3], 3),
        lambda: BitVector.from_string("10") ^ BitVector.from_string("100")])
    def test_bitvector_errors(self, build):
        with pytest.raises(DomainError):
            build()

    def test_charstring(self):
        cs = CharString.from_finset(FinSet([1, 3]), 5)
        assert str(cs) == "01010"
        assert cs.to_finset() == FinSet([1, 3])
        with pytest.raises(DomainError):
            CharString.from_finset(FinSet([5]), 5)


class Test_Codebooks:

    def test_codebook(self):
        cb = Codebook([3, 0, 5])
        assert len(cb) == 3 and cb[2] == 5 and cb.template_len == 3
        assert Codebook.from_json(cb.to_json()) == cb
        with pytest.raises(DomainError):
            Codebook([2, 2])

    def test_problem(self):
        p = SubsetProblem([1, 2, 4], 6, "product")
        assert p.op == SubsetOp.product and isinstance(p.codebook, Codebook)
        q = SubsetProblem.from_json(p.to_json())
        assert (q.codebook, q.target, q.op) == (p.codebook, p.target, p.op)

    def test_fixtures(self, scalefree22, scalefree22_charstring):
        assert fixtures.fixture_names() == ["scalefree22", "xor3"]
        assert len(scalefree22) == 22 == len(scalefree22_charstring)
        with pytest.raises(ValueError):
            fixtures.load_raw("scalefree23")

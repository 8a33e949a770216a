# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import pytest

from diffinfo import subsets, xor
from diffinfo.cli import main
from diffinfo.utils.rand import SplitMix64


class Test_SplitMix64:

    def test_reference_stream(self):
        rng = SplitMix64(0)
        assert [rng.next64() for _ in range(3)] == [
            0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]

    def test_bit_stream(self):
        whole = SplitMix64(9).bits(128)
        rng = SplitMix64(9)
        parts = [rng.bits(4), rng.bits(60), rng.bits(1), rng.bits(63)]
        assert (parts[0] << 124 | parts[1] << 64 | parts[2] << 63 | parts[3]) == whole

    @pytest.mark.parametrize("bound", [1, 2, 3, 10, 1000])
    def test_below(self, bound: int):
        rng = SplitMix64(1)
        assert all(0 <= rng.below(bound) < bound for _ in range(200))

    def test_negative_seed(self):
        with pytest.raises(ValueError):
            SplitMix64(-1)


@pytest.mark.parametrize("seed", [0, 1, 17, 2 ** 40])
class Test_Generators:

    def test_codebooks(self, seed: int):
        cb = subsets.gen_scale_free(16, seed)
        assert cb == subsets.gen_scale_free(16, seed)
        assert all(0 <= e <= 1 << i for i, e in enumerate(cb))
        assert len(set(cb)) == 16

    def test_instances(self, seed: int):
        assert xor.gen_instance(12, 12, seed) == xor.gen_instance(12, 12, seed)
        assert xor.gen_canonical(7, seed).to_json() == xor.gen_canonical(7, seed).to_json()


class Test_Artifacts:

    def test_census_bytes(self, capfd: pytest.CaptureFixture):
        outputs = []
        for threads in ("1", "2"):
            assert main(["census", "--k", "21", "--seed", "3", "--threads", threads, "-f", "csv"]) == 0
            outputs.append(capfd.readouterr().out)
        assert outputs[0] == outputs[1]
        assert outputs[0].startswith("target,count\n0,")

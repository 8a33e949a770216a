# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

import json
from contextlib import nullcontext
from typing import List

import pytest

from diffinfo import xor
from diffinfo.cli import main


def run(capfd: pytest.CaptureFixture, argv: List[str], status: int = 0) -> str:
    assert main(argv) == status
    capture = capfd.readouterr()
    if status == 0:
        assert capture.err == ""
        return capture.out
    assert capture.out == ""
    return capture.err


class Test_Bijections:

    @pytest.mark.parametrize("argv, out", [
        (["pair", "0", "0"], "0\n"),
        (["pair", "3", "5"], "41\n"),
        (["unpair", "41"], "x 3\ny 5\n"),
        (["upsilon", "--set", "1,4,6,8,10,11"], "3410\n"),
        (["upsilon", "--inverse", "3410"], "{1,4,6,8,10,11}\n"),
        (["endo", "0"], "1\n"),
        (["endo", "0", "--iterate", "2"], "step,value\n0,0\n1,1\n2,3\n"),
        (["dilate", "7", "2", "--inverse"], "x 3\ny 5\n"),
        (["zeta", "--kind", "sum", "--set", "0,1"], "zeta 1\ntheta 0\nindex 1\n"),
        (["powerset", "--set", "1,2", "--kind", "sum"], "1 2 3\n"),
        (["mmk", "--keys", "1010,0110", "--message", "1111"], "0011\n"),
        (["mmk", "--keys", "1010,0110", "--message", "0011", "--decrypt"], "1111\n"),
        (["counts", "--kind", "binom", "--n", "5", "--k", "2"], "count 10\ninfo 3.321928\n"),
        (["counts", "--kind", "catalan", "--n", "5"], "count 42\ninfo 5.392317\n"),
        (["counts", "--kind", "stirling2", "--n", "4", "--k", "2"], "count 7\ninfo 2.807355\n"),
        (["counts", "--kind", "bell", "--n", "5"], "count 52\ninfo 5.700440\n")])
    def test_output(self, capfd: pytest.CaptureFixture, argv: List[str], out: str):
        assert run(capfd, argv) == out

    def test_setindex(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["setindex", "--set", "1,4,6,8,10,11"])
        assert out.splitlines() == ["set {1,4,6,8,10,11}", "cardinality 6", "rank 811", "index 334147",
                                    "sum 40", "product 21120", "upsilon 3410"]

    def test_json(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["setindex", "--set", "1,4,6,8,10,11", "--format", "json"])
        assert json.loads(out)["index"] == "334147"

    def test_dilate(self, capfd: pytest.CaptureFixture):
        lines = run(capfd, ["dilate", "3", "5"]).splitlines()
        assert lines[:2] == ["x 7", "y 2"]
        assert lines[2].startswith("delta ")

    def test_missing_columns(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["surface", "--missing", "16", "--rate", "linear", "--c", "1", "-f", "csv"])
        assert out == "column\n0\n2\n3\n6\n7\n8\n12\n13\n14\n15\n"


class Test_Subsets:

    def test_census_window(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["census", "--fixture", "scalefree22", "--range", "0:0", "-f", "csv"])
        assert out == "target,count\n0,2\n"

    def test_census_summary(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["census", "--fixture", "scalefree22", "--range", "1:457659", "--summary"])
        assert out.splitlines() == ["subsets 4194304", "reachable 479020", "reachable_in_range 284709",
                                    "density 0.622099", "mean_solutions 8.756010"]

    def test_charstring(self, capfd: pytest.CaptureFixture, scalefree22_charstring):
        out = run(capfd, ["scalefree", "--fixture", "scalefree22", "--charstring", str(scalefree22_charstring)])
        lines = out.splitlines()
        assert lines[1:] == ["sum 457659", "template_sum 2877600"]

    def test_codebook_json(self, capfd: pytest.CaptureFixture, scalefree22):
        out = run(capfd, ["scalefree", "--fixture", "scalefree22", "-f", "json"])
        assert json.loads(out)["codebook"] == [str(e) for e in scalefree22]


class Test_Sbxor:

    @pytest.mark.parametrize("method", ["gf2", "bruteforce"])
    def test_solve(self, capfd: pytest.CaptureFixture, method: str):
        assert run(capfd, ["sbxor", "solve", "--fixture", "xor3", "--method", method]) == "011\n"

    @pytest.mark.parametrize("selection, out", [("011", "true\n"), ("110", "false\n")])
    def test_check(self, capfd: pytest.CaptureFixture, selection: str, out: str):
        assert run(capfd, ["sbxor", "check", "--fixture", "xor3", "--selection", selection]) == out

    def test_gen(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["sbxor", "gen", "--n", "4", "--k", "5", "--seed", "3"])
        assert json.loads(out) == xor.gen_instance(4, 5, 3).to_json()

    def test_instance_file(self, capfd: pytest.CaptureFixture, tmp_path, xor3):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(xor3.to_json()), encoding="utf-8")
        assert run(capfd, ["sbxor", "solve", "--instance", str(path)]) == "011\n"

    def test_dimacs(self, capfd: pytest.CaptureFixture):
        out = run(capfd, ["sbxor", "sat", "--fixture", "xor3", "-f", "dimacs"])
        assert out.startswith("c diffinfo ")
        assert any(line.startswith("p cnf ") for line in out.splitlines())

    def test_bench(self, capfd: pytest.CaptureFixture):
        lines = run(capfd, ["sbxor", "bench", "--ns", "4,6"]).splitlines()
        assert lines[0] == "n,bruteforce_s,gf2_s"
        assert len(lines) == 3
        assert [line.split(",")[0] for line in lines[1:]] == ["4", "6"]

    def test_absorb(self, capfd: pytest.CaptureFixture, xor3):
        out = run(capfd, ["sbxor", "absorb", "--fixture", "xor3", "--message", "110"])
        data = json.loads(out)
        assert data["target"] == "110" and data["selection"] == "011"


class Test_Entropy:

    def test_table(self, capfd: pytest.CaptureFixture):
        lines = run(capfd, ["entropy-table", "--ks", "1"]).splitlines()
        assert lines[0] == "op,mode,k,n,H,delta"
        assert lines[1] == "and,bit,1,2,0.811278,-1.188722"
        assert len(lines) == 1 + 3 * 4


class Test_Main:

    @pytest.mark.parametrize("argv, status, context", [
        (["pair", "1", "2", "--format", "csv"], 1, nullcontext()),
        (["setindex", "--set", ""], 1, nullcontext()),
        (["sbxor", "solve", "--fixture", "scalefree22"], 1, nullcontext()),
        (["pair", "1"], 2, pytest.raises(SystemExit)),
        (["no-such-command"], 2, pytest.raises(SystemExit))])
    def test_exit_status(self, capfd: pytest.CaptureFixture, argv: List[str], status: int, context):
        with context as info:
            assert main(argv) == status
        capture = capfd.readouterr()
        assert capture.out == ""
        if status == 2:
            assert info.value.code == 2
        else:
            assert capture.err.startswith(f"diffinfo {argv[0]}")

    def test_output_file(self, capfd: pytest.CaptureFixture, tmp_path):
        path = tmp_path / "pair.txt"
        assert run(capfd, ["pair", "3", "5", "--output", str(path)]) == ""
        assert path.read_text(encoding="utf-8") == "41\n"

    def test_byte_identical(self, capfd: pytest.CaptureFixture):
        argv = ["scalefree", "--k", "12", "--seed", "7", "-f", "json"]
        assert run(capfd, argv) == run(capfd, argv)

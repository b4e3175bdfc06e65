import csv
import io
import json
import subprocess
import sys

import pytest

from speciesenum import cli
from speciesenum.powerseries import NonIntegralCount
from speciesenum.verify import CheckResult


def invoke(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


class TestKtrees:
    def test_plain_final_row(self, capsys):
        status, out, _ = invoke(capsys, "ktrees", "--k", "2", "--n", "6")
        assert status == 0
        assert out.splitlines()[-1] == "6 39"
        assert len(out.splitlines()) == 7

    def test_json_counts_are_strings(self, capsys):
        status, out, _ = invoke(capsys, "ktrees", "--k", "3", "--n", "30", "--format", "json")
        doc = json.loads(out)
        assert status == 0
        assert doc["command"] == "ktrees" and doc["params"] == {"k": 3, "n": 30}
        assert doc["results"][-1] == {"n": 30, "count": "10221394007530945428347"}
        assert all(isinstance(r["count"], str) and isinstance(r["n"], int) for r in doc["results"])

    def test_zero_hedra(self, capsys):
        assert invoke(capsys, "ktrees", "--k", "4", "--n", "0")[1] == "0 1\n"


class TestBpblocks:
    def test_csv(self, capsys):
        status, out, _ = invoke(capsys, "bpblocks", "--n", "10", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert status == 0
        assert rows[0] == ["n", "count"]
        assert [r[1] for r in rows[1:]] == ["1", "1", "0", "1", "1", "5", "8", "42", "146", "956"]
        assert out.splitlines()[-1] == "10,956"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "blocks.txt"
        status, out, _ = invoke(capsys, "bpblocks", "--n", "4", "-o", str(target))
        assert status == 0 and out == ""
        assert target.read_text() == "1 1\n2 1\n3 0\n4 1\n"


class TestSpecies:
    def test_omega_json(self, capsys):
        status, out, _ = invoke(capsys, "species", "--name", "Omega", "--degree", "2", "--format", "json")
        assert status == 0
        assert json.loads(out)["results"] == [
            {"monomial": "p1", "coefficient": "1"},
            {"monomial": "p1^2", "coefficient": "-1/2"},
            {"monomial": "p2", "coefficient": "-1/2"},
        ]

    def test_bicolored_has_component_column(self, capsys):
        _, out, _ = invoke(capsys, "species", "--name", "BC", "--degree", "2", "--format", "csv")
        assert out.splitlines() == ["component,monomial,coefficient", "e,p1,2", "e,p1^2,3", "e,p2,1", "tau,p2,2"]

    @pytest.mark.parametrize("name", ["CBP", "BP", "NBP"])
    def test_single_component(self, capsys, name):
        status, out, _ = invoke(capsys, "species", "--name", name, "--degree", "3", "--format", "csv")
        assert status == 0
        assert out.splitlines()[0] == "monomial,coefficient"

    def test_byte_deterministic(self, capsys):
        args = ("species", "--name", "NBP", "--degree", "5")
        assert invoke(capsys, *args)[1] == invoke(capsys, *args)[1]


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["bogus"],
            ["ktrees", "--k", "0", "--n", "3"],
            ["ktrees", "--k", "2"],
            ["ktrees", "--k", "two", "--n", "3"],
            ["bpblocks", "--n", "0"],
            ["species", "--name", "XYZ", "--degree", "3"],
            ["verify", "--suite", "everything"],
            ["ktrees", "--k", "2", "--n", "3", "--unknown"],
            ["ktrees", "--k", "2", "--n", "3", "--format", "xml"],
        ],
    )
    def test_exit_one(self, capsys, argv):
        status, out, err = invoke(capsys, *argv)
        assert status == 1
        assert out == "" and "error" in err


class TestFailures:
    def test_integrality_violation_exits_two(self, capsys, monkeypatch):
        def broken(k, n):
            raise NonIntegralCount("non-integral count: 1/2")

        monkeypatch.setattr(cli, "ktree_counts", broken)
        status, out, err = invoke(capsys, "ktrees", "--k", "2", "--n", "3")
        assert status == 2
        assert out == "" and "integrality" in err

    def test_failed_check_exits_two(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "run_suite", lambda suite: [CheckResult("a", True), CheckResult("b", False, "off by one")])
        status, out, _ = invoke(capsys, "verify", "--suite", "oracles")
        assert status == 2
        assert out.splitlines() == ["PASS a", "FAIL b off by one"]

    def test_refused_bound_exits_two(self, capsys, monkeypatch):
        def refuse(degree):
            raise ValueError("too large")

        monkeypatch.setattr(cli, "BipartitePipeline", refuse)
        assert invoke(capsys, "bpblocks", "--n", "3")[0] == 2


def test_verify_oracles(capsys):
    status, out, _ = invoke(capsys, "verify", "--suite", "oracles")
    assert status == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "speciesenum", "ktrees", "--k", "1", "--n", "9"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "9 106"

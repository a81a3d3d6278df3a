import io
import json
import re
import subprocess
import sys

import pytest

from conftest import FIXTURES
from naqm.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestVerify:
    def test_single_suite(self):
        code, out, _ = run("verify", "--suite", "quaternion-bracket")
        assert code == 0
        assert out.splitlines()[0] == "quaternion-bracket: 9/9 passed"

    def test_all(self):
        code, out, _ = run("verify", "--suite", "all")
        assert code == 0
        summaries = [line for line in out.splitlines() if not line.startswith("  ")]
        assert len(summaries) == 12

    def test_bogus(self):
        code, _, _ = run("verify", "--suite", "bogus")
        assert code == 2

    def test_json(self):
        code, out, _ = run("verify", "--suite", "leibniz-quaternion", "--json")
        assert code == 0
        [rec] = json.loads(out)
        assert rec["total"] == 27 and rec["failures"] == []

    def test_hbar(self):
        code, out, _ = run("verify", "--suite", "scaled-brackets", "--hbar-tilde", "0.5")
        assert code == 0 and "27/27" in out

    def test_bad_hbar(self):
        assert run("verify", "--hbar-tilde", "0")[0] == 2

    @pytest.mark.parametrize("suite", ["matrix-homomorphism", "pauli-relations"])
    def test_extra_checks(self, suite):
        code, out, _ = run("verify", "--suite", suite)
        assert code == 0 and "passed" in out

    def test_deterministic(self):
        assert run("verify", "--json") == run("verify", "--json")

    def test_failure_exit(self, monkeypatch):
        import naqm.verification as verification
        from naqm.algebra import BasisUnit, SignedUnit

        table = verification.load_reference_table()
        table[BasisUnit.E7][BasisUnit.E7] = SignedUnit(-1, BasisUnit.ONE)
        monkeypatch.setattr(verification, "load_reference_table", lambda: table)
        code, out, _ = run("verify", "--suite", "table-fidelity")
        assert code == 1
        assert "e7*e7" in out


class TestSimulate:
    def test_na_qubit_file(self, tmp_path):
        path = tmp_path / "traj.csv"
        code, out, err = run("simulate", "--model", "na-qubit", "--omega", "0,0,1", "--s0", "1,0,0",
                             "--t-max", "6.2832", "--dt", "0.001", "--output", str(path))
        assert code == 0 and out == ""
        lines = path.read_text().splitlines()
        assert lines[0] == "t,s1,s2,s3"
        assert len(lines) == 6285
        assert "6284 rows" in err
        drift = float(re.search(r"= (\S+) \(relative", err).group(1))
        assert drift <= 1e-8

    def test_stdout(self):
        code, out, _ = run("simulate", "--t-max", "0.01", "--dt", "0.001")
        assert code == 0
        assert len(out.splitlines()) == 12

    def test_extended_oscillates(self):
        code, out, err = run("simulate", "--model", "extended", "--n1", "1", "--n2", "-1",
                             "--s0", "1,0,0", "--l0", "0,1,0", "--t-max", "20", "--dt", "0.01")
        assert code == 0
        rows = [[float(v) for v in line.split(",")] for line in out.splitlines()[1:]]
        assert max(abs(v) for r in rows for v in r[1:]) <= 1.5
        assert "|s|^2+|l|^2" in err

    def test_extended_header(self):
        _, out, err = run("simulate", "--model", "extended", "--t-max", "0.1", "--dt", "0.05")
        assert out.splitlines()[0] == "t,s1,s2,s3,l1,l2,l3"
        assert "|s|^2-|l|^2" in err

    @pytest.mark.parametrize("argv", [
        ["--dt", "0"], ["--dt", "-1"], ["--t-max", "0.0001", "--dt", "0.001"], ["--n1", "2"],
        ["--omega", "1,2"], ["--model", "bogus"], ["--s0", "a,b,c"],
    ])
    def test_usage_errors(self, argv):
        assert run("simulate", *argv)[0] == 2

    def test_unwritable(self, tmp_path):
        code, _, err = run("simulate", "--t-max", "0.01", "--dt", "0.001",
                           "-o", str(tmp_path / "missing" / "x.csv"))
        assert code == 2 and "cannot write" in err

    def test_blow_up(self):
        code, out, err = run("simulate", "--model", "extended", "--omega1", "0,0,5", "--omega2", "0,0,5",
                             "--s0", "1,0,0", "--l0", "0,1,0", "--t-max", "10", "--overflow", "1e6")
        assert code == 1
        assert "blew up" in err and out == ""


class TestEval:
    @pytest.mark.parametrize("text, want", [("[i4,i5,i2]", "-2*i3"), ("i0*i1", "-e1"), ("I*I", "-1")])
    def test_examples(self, text, want):
        code, out, _ = run("eval", text)
        assert code == 0 and out == want + "\n"

    def test_leading_minus(self):
        assert run("eval", "--", "-i1")[1] == "-i1\n"

    def test_error(self):
        code, out, err = run("eval", "i1*")
        assert code == 3 and out == ""
        assert err.splitlines()[-2:] == ["i1*", "   ^"]

    def test_note(self):
        code, out, err = run("eval", "i1*i2*i4")
        assert code == 0 and out == "i7\n"
        assert "note:" in err


class TestTable:
    def test_csv(self):
        code, out, _ = run("table", "--format", "csv")
        assert code == 0
        assert out == (FIXTURES / "sedenion_table.csv").read_text()
        assert len(out.splitlines()) == 17

    def test_markdown_file(self, tmp_path):
        path = tmp_path / "t.md"
        assert run("table", "--format", "markdown", "-o", str(path))[0] == 0
        assert path.read_text().startswith("|")

    def test_bad_format(self):
        assert run("table", "--format", "xml")[0] == 2

    def test_unwritable(self, tmp_path):
        assert run("table", "-o", str(tmp_path))[0] == 2


def test_no_command():
    assert run()[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "naqm", "eval", "comm(i1,i2)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "2*i3\n"

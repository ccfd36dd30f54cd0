"""CLI contract: outputs, formats, exit codes, and determinism."""

from __future__ import annotations

import json

import pytest

from tanpoly import cli, multiangle, verify
from tanpoly.exact import Rational
from tanpoly.multiangle import TanValue
from tanpoly.report import VerifyReport
from tanpoly.triangles import m_row, n_row, r_row, t_row, tilde_r_row, tilde_t_row


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTriangleCommand:
    def test_rtilde_table(self, capsys):
        code, out, _ = run_cli(capsys, "triangle", "--name", "Rtilde", "--rows", "5")
        assert code == 0
        assert out.splitlines()[-1] == "1 14 41 44 16"

    def test_ttilde_bfile(self, capsys):
        code, out, _ = run_cli(
            capsys, "triangle", "--name", "Ttilde", "--rows", "3", "--format", "bfile"
        )
        assert code == 0
        assert out == "1 1\n2 2\n3 2\n4 3\n5 7\n6 4\n"

    def test_t_single_row_csv(self, capsys):
        code, out, _ = run_cli(capsys, "triangle", "--name", "T", "--rows", "1", "--format", "csv")
        assert code == 0
        assert out == "1\n"

    def test_r_row_zero_is_empty(self, capsys):
        code, out, _ = run_cli(capsys, "triangle", "--name", "R", "--rows", "3")
        assert code == 0
        assert out.splitlines() == ["", "1", "2"]

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(capsys, "triangle", "--name", "M", "--rows", "4", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["name"] == "M" and doc["first_row"] == 0
        assert doc["rows"] == [["1"], ["2"], ["6", "2"], ["24", "24"]]

    def test_unknown_name_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "triangle", "--name", "X", "--rows", "3")
        assert code == 2

    def test_unknown_format_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "triangle", "--name", "R", "--rows", "3", "--format", "xml")
        assert code == 2

    def test_zero_rows_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "triangle", "--name", "R", "--rows", "0")
        assert code == 2
        assert "at least 1" in err

    def test_mn_row_cap(self, capsys):
        code, _, err = run_cli(capsys, "triangle", "--name", "M", "--rows", "61")
        assert code == 2
        assert "capped" in err
        code, out, _ = run_cli(capsys, "triangle", "--name", "N", "--rows", "60", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 60

    @pytest.mark.parametrize(
        "name,row_fn,first",
        [
            ("R", r_row, 0),
            ("T", t_row, 0),
            ("M", m_row, 0),
            ("N", n_row, 0),
            ("Rtilde", tilde_r_row, 1),
            ("Ttilde", tilde_t_row, 1),
        ],
    )
    def test_bfile_round_trip(self, capsys, name, row_fn, first):
        rows = 10
        code, out, _ = run_cli(
            capsys, "triangle", "--name", name, "--rows", str(rows), "--format", "bfile"
        )
        assert code == 0
        values = []
        for i, line in enumerate(out.splitlines(), start=1):
            index, value = line.split(" ")
            assert int(index) == i
            values.append(int(value))
        expected_rows = [row_fn(n) for n in range(first, first + rows)]
        rebuilt = []
        pos = 0
        for row in expected_rows:
            rebuilt.append(values[pos : pos + len(row)])
            pos += len(row)
        assert pos == len(values)
        assert rebuilt == expected_rows


class TestPolyCommand:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "--family", "T", "--n", "3")
        assert code == 0
        assert out == "3y + 7y^3 + 4y^5\n"

    def test_p_zero(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "--family", "P", "--n", "0")
        assert code == 0
        assert out == "y\n"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "--family", "R", "--n", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == [[1, "2"], [3, "2"]]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "--family", "Q", "--n", "2", "--format", "csv")
        assert code == 0
        assert out == "0,1\n2,2\n"

    def test_rt_zero_index_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "poly", "--family", "R", "--n", "0")
        assert code == 2
        assert "at least 1" in err

    def test_pq_zero_index_ok_but_negative_rejected(self, capsys):
        code, _, _ = run_cli(capsys, "poly", "--family", "Q", "--n", "0")
        assert code == 0
        code, _, _ = run_cli(capsys, "poly", "--family", "Q", "--n", "-1")
        assert code == 2

    def test_bfile_not_a_poly_format(self, capsys):
        code, _, _ = run_cli(capsys, "poly", "--family", "R", "--n", "2", "--format", "bfile")
        assert code == 2


class TestTanCommand:
    def test_single_method(self, capsys):
        code, out, _ = run_cli(capsys, "tan", "--n", "3", "--t", "1/1", "--method", "beeler")
        assert code == 0
        assert out == "-1\n"

    def test_zero_n(self, capsys):
        code, out, _ = run_cli(capsys, "tan", "--n", "0", "--t", "5/3", "--method", "beeler")
        assert code == 0
        assert out == "0\n"

    def test_all_methods_pole(self, capsys):
        code, out, _ = run_cli(capsys, "tan", "--n", "2", "--t", "1/1", "--method", "all")
        assert code == 0
        assert out == "beeler: pole\naddition: pole\ngaussian: pole\nagree: yes\n"

    def test_all_methods_finite(self, capsys):
        code, out, _ = run_cli(capsys, "tan", "--n", "2", "--t", "1/2")
        assert code == 0
        assert out == "beeler: 4/3\naddition: 4/3\ngaussian: 4/3\nagree: yes\n"

    def test_malformed_t_exits_2(self, capsys):
        for bad in ("abc", "1/0", "1.5"):
            code, _, err = run_cli(capsys, "tan", "--n", "2", "--t", bad)
            assert code == 2
            assert "rational" in err

    def test_negative_n_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "tan", "--n", "-1", "--t", "1/2")
        assert code == 2

    def test_disagreement_exits_1(self, capsys, monkeypatch):
        monkeypatch.setitem(
            multiangle.METHODS, "addition", lambda n, t: TanValue(Rational(999))
        )
        code, out, _ = run_cli(capsys, "tan", "--n", "1", "--t", "1/2", "--method", "all")
        assert code == 1
        assert out.endswith("agree: no\n")


class TestVerifyCommand:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "12")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert all(": pass (checked " in line for line in lines)

    def test_single_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "corollary", "--max-n", "25")
        assert code == 0
        assert out.startswith("corollary: pass")

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "tables", "--max-n", "5", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True
        assert doc["reports"][0]["suite"] == "tables"
        assert doc["reports"][0]["checked"] == 10

    def test_unknown_suite_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "nonsense")
        assert code == 2

    def test_bad_max_n_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "0")
        assert code == 2

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        broken = VerifyReport("tables", 1, ({"n": "1", "got": "[]", "want": "[1]"},))
        monkeypatch.setitem(verify.SUITES, "tables", lambda max_n: broken)
        code, out, _ = run_cli(capsys, "verify", "--suite", "tables")
        assert code == 1
        assert "FAIL" in out and "want=[1]" in out


class TestHarness:
    def test_missing_subcommand_exits_2(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_help_exits_0(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    @pytest.mark.parametrize(
        "argv",
        [
            ("triangle", "--name", "Ttilde", "--rows", "8", "--format", "bfile"),
            ("poly", "--family", "Q", "--n", "7", "--format", "json"),
            ("tan", "--n", "12", "--t", "-3/7", "--method", "all"),
            ("verify", "--suite", "tables", "--json"),
        ],
    )
    def test_output_is_deterministic(self, capsys, argv):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second

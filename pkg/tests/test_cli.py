import json
import re

import pytest

from knotfog import cli, selftest
from knotfog.seifert import SeifertMatrix, theta

TREFOIL_REPORT = """\
expression   trefoil
genus        [1, 1]
alexander    t^2 - t + 1
slice        no
in_R         no
trivial      no
g1           [2, 2]
g1 bounds:
  lo 2  first-order/twice-genus
  hi 2  first-order/leaf-certificate
warnings: none
"""


class TestInvariants:
    def test_trefoil_table_golden(self, capsys):
        assert cli.main(["invariants", "trefoil"]) == 0
        assert capsys.readouterr().out == TREFOIL_REPORT

    def test_unknot_values(self, capsys):
        assert cli.main(["invariants", "unknot", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["facts"]["genus"] == {"lo": 0, "hi": 0}
        assert data["facts"]["alexander"] == {"min_degree": 0, "coeffs": [1]}
        assert data["first_order_genus"]["lo"] == 0
        assert data["first_order_genus"]["hi"] == 0

    def test_whitehead_row(self, capsys):
        assert cli.main(["invariants", "wh0(kfam(2))", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["expression"] == "wh0(kfam(2), clasp=+)"
        assert data["facts"]["genus"] == {"lo": 1, "hi": 1}
        assert data["facts"]["alexander"] == {"min_degree": 0, "coeffs": [1]}
        assert data["facts"]["slice"] == "yes"
        assert data["first_order_genus"] == {
            "lo": 3, "hi": 3,
            "provenance": data["first_order_genus"]["provenance"]}
        assert [r["bound"] for r in data["first_order_genus"]["provenance"]] == ["lo", "hi"]

    def test_parse_error_exits_2(self, capsys):
        assert cli.main(["invariants", "kfam(0)"]) == 2
        err = capsys.readouterr().err
        assert "parse error" in err and "position" in err

    def test_warnings_shown(self, capsys):
        assert cli.main(["invariants", "wh0(atom(J, genus=1))"]) == 0
        out = capsys.readouterr().out
        assert "warnings:" in out and "noncable" in out

    def test_json_report_is_machine_valid(self, capsys):
        assert cli.main(["invariants", "trefoil # atom(J, genus=2)", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["facts"]["alexander"] == "unknown"
        assert set(data) == {"expression", "facts", "first_order_genus", "warnings"}

    def test_deterministic_output(self, capsys):
        cli.main(["invariants", "ksat(fig8, kfam(2), 1, -2)", "--json"])
        first = capsys.readouterr().out
        cli.main(["invariants", "ksat(fig8, kfam(2), 1, -2)", "--json"])
        assert capsys.readouterr().out == first


FAMILY_TABLE_3 = """\
knot                   g  alexander  slice  g1_lo  g1_hi
wh0(kfam(1), clasp=+)  1  1          yes    2      2
wh0(kfam(2), clasp=+)  1  1          yes    3      3
wh0(kfam(3), clasp=+)  1  1          yes    4      4
"""


class TestFamilyTable:
    def test_golden_three_rows(self, capsys):
        assert cli.main(["family-table", "--n", "3"]) == 0
        assert capsys.readouterr().out == FAMILY_TABLE_3

    def test_single_row(self, capsys):
        assert cli.main(["family-table", "--n", "1"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 2
        assert out[1].split() == ["wh0(kfam(1),", "clasp=+)", "1", "1", "yes", "2", "2"]

    def test_zero_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["family-table", "--n", "0"])
        assert exc.value.code == 2

    def test_too_large_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["family-table", "--n", "13"])
        assert exc.value.code == 2

    def test_deterministic(self, capsys):
        cli.main(["family-table", "--n", "8"])
        first = capsys.readouterr().out
        cli.main(["family-table", "--n", "8"])
        assert capsys.readouterr().out == first


class TestSelftestCommand:
    def test_all_pass_and_exit_zero(self, capsys):
        assert cli.main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == len(selftest.CRITERIA)
        assert "FAIL" not in out
        assert "9/9 criteria passed" in out

    def test_timings_go_to_stderr_only(self, capsys):
        cli.main(["selftest"])
        captured = capsys.readouterr()
        assert re.search(r"\d+\.\d+s", captured.err)
        assert not re.search(r"\d+\.\d+s", captured.out)

    def test_stdout_is_deterministic(self, capsys):
        cli.main(["selftest"])
        first = capsys.readouterr().out
        cli.main(["selftest"])
        assert capsys.readouterr().out == first

    def test_corrupted_theta_is_caught(self, monkeypatch):
        # deliberate sign-flip fault: the pretzel criterion must go red
        real = theta

        def corrupted(n):
            rows = [list(row) for row in real(n).entries]
            rows[0][1] = -rows[0][1]
            return SeifertMatrix(rows)

        monkeypatch.setattr("knotfog.seifert.theta", corrupted)
        result = selftest.run_criterion("pretzel-polynomial-identity")
        assert not result.passed
        assert "n=1" in result.detail

    def test_failing_criterion_exits_one(self, monkeypatch, capsys):
        real = theta

        def corrupted(n):
            rows = [list(row) for row in real(n).entries]
            rows[0][1] = -rows[0][1]
            return SeifertMatrix(rows)

        monkeypatch.setattr("knotfog.seifert.theta", corrupted)
        assert cli.main(["selftest"]) == 1
        out = capsys.readouterr().out
        assert "FAIL pretzel-polynomial-identity" in out

    def test_missing_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2

import json
import subprocess
import sys

import pytest

from rrbeck.cli import ORDER_ENV, main, parse_config


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestGoldens:
    def test_t2_row(self, capsys):
        assert run_cli(capsys, "series", "--name", "t2", "--order", "4") == (0, "0,1,1,1,3\n", "")

    def test_t2_csv(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--name", "t2", "--order", "4", "--format", "csv")
        assert out == "q^0,q^1,q^2,q^3,q^4\n0,1,1,1,3\n"

    def test_series_json(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--name", "s1", "--order", "4", "--format", "json")
        assert json.loads(out) == {"name": "s1", "order": 4, "coeffs": [0, 0, 1, 1, 2]}

    def test_sset_4(self, capsys):
        assert run_cli(capsys, "sset", "--n", "4") == (0, "lambda=[2] a=2 b=1\n", "")

    def test_sset_9_json(self, capsys):
        _, out, _ = run_cli(capsys, "sset", "--n", "9", "--format", "json")
        assert json.loads(out)[-1] == {"lambda": [], "a": 3, "b": 3}

    def test_theorem1_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--check", "theorem1", "--max-n", "4", "--format", "json")
        d = json.loads(out)
        assert code == 0 and d["status"] == "pass"
        assert d["witnesses"][4]["expected"] == 2

    def test_table_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--theorem", "rr2-beck", "--max-n", "4", "--format", "csv")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "n,lhs,rhs,excess,match"
        assert lines[-1] == "4,2,1,1,true"

    def test_table_human(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--theorem", "corollary", "--max-n", "3")
        assert code == 0 and out.splitlines()[1].split()[0] == "1"


class TestExitCodes:
    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    @pytest.mark.parametrize("argv", [
        ["series", "--name", "nope"],
        ["series", "--name", "t1", "--order", "-3"],
        ["verify", "--max-n", "-1"],
        ["verify", "--max-n", "ten"],
        ["sset"],
        ["table", "--theorem", "rr1-beck", "--format", "xml"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run_cli(capsys, *argv)[0] == 2

    def test_failure_exit_is_one(self, capsys, monkeypatch):
        from rrbeck import verify
        from rrbeck.qseries import series_from_coeffs

        real = verify.genfun.s1_series

        def broken(order):
            cs = list(real(order).coeffs)
            cs[3] -= 1
            return series_from_coeffs(cs, order)

        monkeypatch.setattr(verify.genfun, "s1_series", broken)
        code, out, _ = run_cli(capsys, "verify", "--check", "theorem2", "--max-n", "6")
        assert code == 1 and "fail" in out

    def test_diagnostics_go_to_stderr_without_failing(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--check", "psi", "--max-n", "10")
        assert code == 0
        assert "diagnostic-discrepancy" in out
        assert err.startswith("rrbeck: diagnostic [psi] reverse I3")


class TestConfig:
    def test_env_order(self, monkeypatch):
        monkeypatch.setenv(ORDER_ENV, "7")
        cfg = parse_config(["series", "--name", "t1"])
        assert cfg.order == 7 and not cfg.order_given

    def test_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv(ORDER_ENV, "7")
        cfg = parse_config(["series", "--name", "t1", "--order", "3"])
        assert cfg.order == 3 and cfg.order_given

    def test_bad_env(self, monkeypatch, capsys):
        monkeypatch.setenv(ORDER_ENV, "lots")
        assert run_cli(capsys, "series", "--name", "t1")[0] == 2

    def test_env_applies_to_series(self, monkeypatch, capsys):
        monkeypatch.setenv(ORDER_ENV, "4")
        assert run_cli(capsys, "series", "--name", "t2")[1] == "0,1,1,1,3\n"


class TestOutput:
    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "t2.csv"
        code, out, _ = run_cli(capsys, "series", "--name", "t2", "--order", "4", "--format", "csv", "-o", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "q^0,q^1,q^2,q^3,q^4\n0,1,1,1,3\n"

    @pytest.mark.parametrize("fmt", ["csv", "json", "human"])
    def test_byte_stable(self, capsys, fmt):
        argv = ["verify", "--check", "beck_pair_form", "--max-n", "8", "--format", fmt]
        first = run_cli(capsys, *argv)[1]
        assert run_cli(capsys, *argv)[1] == first

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "rrbeck", "sset", "--n", "4"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0 and proc.stdout == "lambda=[2] a=2 b=1\n"

"""Command-line interface: subcommands, config ingestion, exit codes."""

import json

import pytest

from govgap.cli import main


class TestSolve:
    def test_prints_solution(self, capsys):
        assert main(["solve", "--theta", "2", "--mu", "2", "--lambda", "2"]) == 0
        out = capsys.readouterr().out
        assert "alpha_star: 1.0" in out
        assert "p_star: 0.5" in out

    def test_json_output(self, tmp_path):
        out = tmp_path / "sol.json"
        code = main(
            ["solve", "--theta", "2", "--lambda", "1.25",
             "--format", "json", "--out", str(out)]
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["rows"][0]["alpha_star"] == pytest.approx(1.8377, abs=5e-4)


class TestConfigFile:
    def test_config_supplies_values(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"theta": 2, "mu": 2, "lambda": 2}))
        assert main(["solve", "--config", str(cfg)]) == 0
        assert "alpha_star: 1.0" in capsys.readouterr().out

    def test_flags_override_config(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"theta": 2, "mu": 2, "lambda": 2}))
        assert main(["solve", "--config", str(cfg), "--lambda", "0.71"]) == 0
        out = capsys.readouterr().out
        assert "alpha_star: 2.616" in out

    def test_bad_config_is_usage_error(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json")
        assert main(["solve", "--config", str(cfg)]) == 2

    def test_unknown_key_is_usage_error(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"thta": 2}))
        assert main(["solve", "--config", str(cfg)]) == 2


class TestSubcommands:
    def test_table_csv(self, tmp_path):
        out = tmp_path / "t5.csv"
        assert main(["table", "--id", "T5", "--out", str(out)]) == 0
        assert len(out.read_text().strip().splitlines()) == 29

    def test_sweep_svg_and_json(self, tmp_path):
        svg = tmp_path / "s.svg"
        assert main(
            ["sweep", "--axis", "theta", "--lo", "0.5", "--hi", "5", "--n", "10",
             "--lambda", "2", "--format", "svg", "--out", str(svg)]
        ) == 0
        assert "<polyline" in svg.read_text()
        jsn = tmp_path / "s.json"
        assert main(
            ["sweep", "--axis", "lambda", "--lo", "0.2", "--hi", "2", "--n", "7",
             "--theta", "2", "--format", "json", "--out", str(jsn)]
        ) == 0
        assert len(json.loads(jsn.read_text())["rows"]) == 7

    def test_sweep_figure(self, tmp_path):
        fig = tmp_path / "s.png"
        assert main(
            ["sweep", "--axis", "theta", "--lo", "0.5", "--hi", "5", "--n", "10",
             "--lambda", "1.25", "--fig", str(fig), "--out", str(tmp_path / "s.csv")]
        ) == 0
        assert fig.stat().st_size > 0

    def test_welfare(self, capsys):
        assert main(["welfare", "--e", "0.5", "--lambda", "1.14"]) == 0
        assert "alpha_sb: 1.225" in capsys.readouterr().out

    def test_welfare_without_e_is_usage_error(self):
        assert main(["welfare", "--lambda", "1.14"]) == 2

    def test_upgrade(self, capsys):
        assert main(
            ["upgrade", "--theta-l", "0.5", "--theta-f", "2", "--lambda", "1.25"]
        ) == 0
        out = capsys.readouterr().out
        assert "adopt: False" in out
        assert "trap: True" in out

    def test_ext(self, capsys):
        assert main(["ext", "--gamma", "0", "--lambda", "0.8"]) == 0
        assert "alpha_star: 3.2" in capsys.readouterr().out

    def test_ext_rejects_multi_deviation(self):
        assert main(["ext", "--gamma", "0", "--beta", "2"]) == 2

    def test_governance(self, capsys):
        assert main(["governance", "--lambda0", "1.5", "--k", "0.5"]) == 0
        assert "capped: True" in capsys.readouterr().out

    def test_governance_without_inputs_is_usage_error(self):
        assert main(["governance"]) == 2

    def test_verify_passes(self, capsys):
        assert main(["verify", "--points", "20"]) == 0
        assert "verification passed" in capsys.readouterr().out


class TestUsageErrors:
    def test_bad_flag_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--bogus", "1"])
        assert exc.value.code == 2

    def test_bad_axis_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--axis", "rho", "--lo", "0", "--hi", "1", "--n", "5"])
        assert exc.value.code == 2

    def test_invalid_range_is_usage_error(self):
        assert main(
            ["sweep", "--axis", "theta", "--lo", "5", "--hi", "1", "--n", "5"]
        ) == 2

    def test_invalid_params_is_usage_error(self):
        assert main(["solve", "--theta", "-1"]) == 2

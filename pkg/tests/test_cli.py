import json
import subprocess
import sys

import pytest

from qcorr.cli import CSV_HEADER, main

P_06_SUM = 0.2780719051126377

FAST = ["--points", "41", "--tmax", "1"]


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCsvOutput:
    def test_mazzola_default_values(self, capsys):
        code, out, _ = run_cli(capsys, ["--family", "mazzola", *FAST])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == CSV_HEADER
        first = lines[1].split(",")
        assert first[0] == "0.00000000"
        assert first[2] == "1.00000000"  # C at t=0
        assert float(first[3]) == pytest.approx(P_06_SUM, abs=1e-6)  # D at t=0
        assert lines[-1].startswith("# transition: detected_t=")

    def test_werner_reports_no_transition(self, capsys):
        code, out, _ = run_cli(capsys, ["--family", "werner", "--beta", "0.8", *FAST])
        assert code == 0
        assert out.strip().splitlines()[-1] == (
            "# transition: detected_t=none,analytic_t=none"
        )

    def test_pure_classical_column_constant(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--family", "pure", "--theta", "0.7853981634", *FAST]
        )
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:-1]]
        assert all(row[2] == "1.00000000" for row in rows)

    def test_full_default_grid_detects_transition(self, capsys):
        code, out, _ = run_cli(capsys, ["--family", "mazzola"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 1 + 801 + 1
        summary = lines[-1]
        assert "analytic_t=0.255412812" in summary
        detected = summary.split("detected_t=")[1].split(",")[0]
        assert abs(float(detected) - 0.255412812) <= 0.01


class TestJsonOutput:
    def test_schema_and_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--family", "mazzola", "--format", "json", *FAST]
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"scenario", "samples", "transition"}
        assert payload["scenario"]["family"] == "mazzola"
        assert payload["scenario"]["c3"] == 0.6
        sample = payload["samples"][0]
        assert set(sample) == {"t", "I", "C", "D", "Icomp", "c1", "c2", "c3"}
        assert set(payload["transition"]) == {"detected_t", "analytic_t"}
        # re-parsed values equal the engine's bit for bit
        from qcorr.dynamics import Scenario, evolve_trajectory

        traj = evolve_trajectory(Scenario.mazzola(t_max=1.0, n_points=41))
        for parsed, computed in zip(payload["samples"], traj):
            assert parsed["t"] == computed.t
            assert parsed["I"] == computed.mutual_info
            assert parsed["C"] == computed.classical
            assert parsed["D"] == computed.discord
            assert parsed["Icomp"] == computed.complementary
        assert json.loads(json.dumps(payload)) == payload

    def test_null_transition_fields(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["--family", "werner", "--beta", "0.4", "--format", "json", *FAST],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["transition"]["detected_t"] is None
        assert payload["transition"]["analytic_t"] is None


class TestDeterminism:
    def test_identical_config_gives_identical_bytes(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            assert main(["--family", "mazzola", *FAST, "--out", str(path)]) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_nine_significant_digit_rendering(self):
        from qcorr.cli import _NUM

        assert _NUM.format(1.0) == "1.00000000"
        assert _NUM.format(0.2554128118829953) == "0.255412812"
        assert _NUM.format(-0.6) == "-0.600000000"
        assert _NUM.format(2.5e-05) == "2.50000000e-05"


class TestConfigFile:
    def test_file_only(self, capsys, tmp_path):
        config = tmp_path / "scenario.json"
        config.write_text(
            json.dumps({"family": "mazzola", "c3": 0.5, "points": 41, "tmax": 1})
        )
        code, out, _ = run_cli(capsys, ["--config", str(config)])
        assert code == 0
        assert "analytic_t=0.346573590" in out  # -ln(0.5)/2

    def test_flags_override_file(self, capsys, tmp_path):
        config = tmp_path / "scenario.json"
        config.write_text(
            json.dumps({"family": "mazzola", "c3": 0.5, "points": 41, "tmax": 1})
        )
        code, out, _ = run_cli(capsys, ["--config", str(config), "--c3", "0.6"])
        assert code == 0
        assert "analytic_t=0.255412812" in out

    def test_custom_family_fano(self, capsys, tmp_path):
        config = tmp_path / "scenario.json"
        config.write_text(
            json.dumps(
                {
                    "family": "custom",
                    "fano": {
                        "a": [0, 0, 0],
                        "b": [0, 0, 0],
                        "T": [[0.8, 0, 0], [0, -0.5, 0], [0, 0, 0.5]],
                    },
                    "points": 21,
                    "tmax": 1,
                }
            )
        )
        code, out, _ = run_cli(capsys, ["--config", str(config)])
        assert code == 0
        first = out.strip().splitlines()[1].split(",")
        assert float(first[5]) == pytest.approx(0.8, abs=1e-9)

    def test_unknown_config_key(self, capsys, tmp_path):
        config = tmp_path / "scenario.json"
        config.write_text(json.dumps({"family": "mazzola", "bogus": 1}))
        code, _, err = run_cli(capsys, ["--config", str(config)])
        assert code == 2
        assert "bogus" in err

    def test_missing_config_file(self, capsys):
        code, _, err = run_cli(capsys, ["--config", "/nonexistent.json"])
        assert code == 2
        assert "configuration error" in err


class TestValidation:
    def test_validate_only_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--family", "pure", "--theta", "0.7853981634", "--validate-only"]
        )
        assert code == 0
        assert out.startswith("pass")

    def test_validate_only_c3_out_of_range(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--family", "mazzola", "--c3", "1.2", "--validate-only"]
        )
        assert code == 2
        assert "|c3| <= 1 violated" in out

    def test_validate_only_werner_not_psd(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--family", "werner", "--beta", "-0.5", "--validate-only"]
        )
        assert code == 2
        assert "state not PSD" in out

    def test_invalid_scenario_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["--family", "werner", "--beta", "2.0", *FAST])
        assert code == 2
        assert "invalid scenario" in err

    def test_missing_family_exits_2(self, capsys):
        code, _, err = run_cli(capsys, [*FAST])
        assert code == 2
        assert "family" in err

    def test_bad_flag_value_exits_2(self, capsys):
        assert run_cli(capsys, ["--family", "ghz"])[0] == 2


class TestEngineErrorPath:
    def test_consistency_error_exits_3(self, capsys, monkeypatch):
        from qcorr import cli
        from qcorr.errors import ConsistencyError

        def boom(scenario):
            raise ConsistencyError("routes disagree")

        monkeypatch.setattr(cli, "evolve_trajectory", boom)
        code, _, err = run_cli(capsys, ["--family", "mazzola", *FAST])
        assert code == 3
        assert "engine consistency error" in err


class TestModuleEntryPoint:
    def test_python_dash_m(self, tmp_path):
        out = tmp_path / "run.csv"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "qcorr",
                "--family",
                "mazzola",
                "--points",
                "21",
                "--tmax",
                "0.5",
                "--out",
                str(out),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert out.read_text().splitlines()[0] == CSV_HEADER

import csv
import math
import subprocess
import sys
from pathlib import Path

import pytest

from broadband_capacity.cli import (
    SWEEP_HEADER,
    _parse_eta_range,
    main,
    profile_rows,
    run_verify,
    sweep_rows,
    write_figure_data,
)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "broadband_capacity.cli", *args],
        capture_output=True,
        text=True,
    )


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestParsing:
    def test_eta_range(self):
        grid = _parse_eta_range("0:1:0.25")
        assert grid == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
        assert _parse_eta_range("0.3") == [0.3]

    def test_eta_range_errors(self):
        from broadband_capacity.cli import CliError

        with pytest.raises(CliError):
            _parse_eta_range("0:1:0")
        with pytest.raises(CliError):
            _parse_eta_range("1:0:0.1")
        with pytest.raises(CliError):
            _parse_eta_range("1.5")


class TestSweep:
    def test_loss_sweep_matches_sqrt_eta(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(
            [
                "sweep",
                "--model",
                "loss",
                "--quantity",
                "c_lower",
                "--eta",
                "0.2:1:0.2",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        rows = read_rows(out)
        assert len(rows) == 5
        for row in rows:
            assert float(row["factor"]) == pytest.approx(
                math.sqrt(float(row["eta"])), abs=1e-5
            )
            assert row["error"] == ""

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "--model", "white", "--nbar", "1", "--quantity", "c_lower",
                "--eta", "0.4:0.8:0.2"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_header(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["sweep", "--model", "loss", "--quantity", "c_lower", "--eta", "0.5",
              "--out", str(out)])
        assert out.read_text().splitlines()[0] == SWEEP_HEADER

    def test_all_quantities_ordering(self):
        rows = sweep_rows("white", [0.5], 1.0, 0.0, ["ce", "c_lower", "q_lower", "q_alt"])
        by_q = {r["quantity"]: r["factor"] for r in rows}
        assert by_q["ce"] >= by_q["c_lower"] - 1e-9
        assert by_q["ce"] / 2.0 >= by_q["q_lower"] - 1e-9
        assert by_q["q_alt"] == max(by_q["ce"] - 1.0, 0.0)

    def test_parallel_jobs_match_serial(self, tmp_path):
        serial = sweep_rows("loss", [0.3, 0.6], 0.0, 0.0, ["c_lower"], jobs=1)
        parallel = sweep_rows("loss", [0.3, 0.6], 0.0, 0.0, ["c_lower"], jobs=2)
        assert serial == parallel


class TestProfile:
    def test_loss_profile_closed_form(self):
        rows = profile_rows("loss", 0.5, 0.0, 0.0, "c_lower", 40, 6.0)
        for x, n, clamped in rows:
            assert n == pytest.approx(2.0 / math.expm1(2.0 * x), rel=1e-8, abs=1e-10)
            assert clamped == 0

    def test_white_profile_cutoff(self):
        eta, nbar = 0.5, 1.0
        cutoff = eta * math.log(1.0 + 1.0 / ((1.0 - eta) * nbar))
        rows = profile_rows("white", eta, nbar, 0.0, "c_lower", 60, 2.0)
        for x, n, clamped in rows:
            if x > cutoff * 1.01:
                assert clamped == 1 and n == 0.0
            elif x < cutoff * 0.99:
                assert clamped == 0 and n > 0.0

    def test_thermal_quantum_leading_zeros(self):
        rows = profile_rows("thermal", 0.8, 0.0, 0.41, "q_lower", 60, 6.0)
        assert rows[0][2] == 1  # clamped at low frequency
        assert any(clamped == 0 for _, _, clamped in rows)


class TestReportCommand:
    def test_power_law(self):
        a = run_cli("report", "--model", "loss", "--eta", "1", "--power", "1e-9")
        b = run_cli("report", "--model", "loss", "--eta", "1", "--power", "4e-9")
        assert a.returncode == 0 and b.returncode == 0

        def rate(out, name):
            for line in out.splitlines():
                if line.startswith(name + " "):
                    return float(line.split()[2])
            raise AssertionError(f"{name} not found in {out}")

        assert rate(b.stdout, "c_lower") == pytest.approx(2.0 * rate(a.stdout, "c_lower"), rel=1e-3)
        # noiseless endpoint: classical rate equals T * R_C, assisted is twice
        rc = float([l for l in a.stdout.splitlines() if l.startswith("R_C")][0].split()[2])
        assert rate(a.stdout, "c_lower") == pytest.approx(rc, rel=2e-3)
        assert rate(a.stdout, "ce") == pytest.approx(2.0 * rc, rel=2e-3)

    def test_thermal_report_from_temperature(self):
        res = run_cli(
            "report", "--model", "thermal", "--eta", "0.7", "--power", "1e-11",
            "--temp", "0.5",
        )
        assert res.returncode == 0
        assert "rho_t=" in res.stdout and "T_c" in res.stdout


class TestErrors:
    def test_invalid_eta_exits_nonzero(self):
        res = run_cli("sweep", "--model", "loss", "--quantity", "c_lower",
                      "--eta", "1.5", "--out", "/tmp/x.csv")
        assert res.returncode == 2
        err_lines = [l for l in res.stderr.splitlines() if l]
        assert len(err_lines) == 1
        assert err_lines[0].startswith("error: ")

    def test_thermal_needs_ratio_or_temperature(self):
        res = run_cli("sweep", "--model", "thermal", "--quantity", "c_lower",
                      "--eta", "0.5", "--out", "/tmp/x.csv")
        assert res.returncode == 2
        assert "thermal" in res.stderr

    def test_missing_out(self):
        res = run_cli("sweep", "--model", "loss", "--quantity", "c_lower", "--eta", "0.5")
        assert res.returncode == 2
        assert res.stderr.startswith("error: ")

    def test_unwritable_out(self):
        res = run_cli("sweep", "--model", "loss", "--quantity", "c_lower",
                      "--eta", "0.5", "--out", "/nonexistent-dir/x.csv")
        assert res.returncode == 2


class TestConfig:
    def test_flags_override_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("model=loss\nquantity=c_lower\neta=0.5\n")
        out = tmp_path / "out.csv"
        code = main(["sweep", "--config", str(cfg), "--eta", "0.25", "--out", str(out)])
        assert code == 0
        rows = read_rows(out)
        assert len(rows) == 1
        assert float(rows[0]["eta"]) == 0.25  # flag wins over config value

    def test_config_supplies_missing(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("model=loss\nquantity=c_lower\n")
        out = tmp_path / "out.csv"
        assert main(["sweep", "--config", str(cfg), "--eta", "0.5", "--out", str(out)]) == 0

    def test_bad_config_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("bogus=1\n")
        assert main(["sweep", "--config", str(cfg), "--eta", "0.5", "--out", "/tmp/x.csv"]) == 2


class TestFigureData:
    def test_fig7(self, tmp_path):
        files = write_figure_data("fig7", tmp_path)
        assert len(files) == 3
        rows = read_rows(files[0])
        assert set(rows[0]) == {"lambda_diff", "mutual_info_bits"}
        vals = [float(r["mutual_info_bits"]) for r in rows]
        assert vals[0] == max(vals)  # peak at zero splitting

    def test_fig3(self, tmp_path):
        files = write_figure_data("fig3", tmp_path)
        assert {f.name for f in files} == {
            "fig3_ce.csv",
            "fig3_c_lower.csv",
            "fig3_q_lower.csv",
        }

    def test_unknown_figure(self, tmp_path):
        from broadband_capacity.cli import CliError

        with pytest.raises(CliError):
            write_figure_data("fig9", tmp_path)


class TestVerify:
    def test_quick_suites_pass(self, capsys):
        failures = run_verify(suites=["special", "oracle", "no-squeezing"])
        out = capsys.readouterr().out
        assert failures == 0
        assert "FAIL" not in out
        assert out.strip().endswith("OK")

    def test_default_run_passes_every_suite(self, capsys):
        failures = run_verify()
        out = capsys.readouterr().out
        assert failures == 0
        assert "FAIL" not in out

    def test_cli_verify_subset(self):
        res = run_cli("verify", "--suite", "no-squeezing")
        assert res.returncode == 0
        assert "PASS" in res.stdout

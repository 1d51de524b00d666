import csv
import json

import pytest

from noonlike.cli import main, parse_args
from noonlike.errors import UsageError


def _read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], [[float(v) if i or row[0][0].isdigit() else v for i, v in enumerate(row)] for row in rows[1:]]


class TestParseArgs:
    def test_compare_valid(self):
        cfg = parse_args(["compare", "--d", "5", "--n-bar", "4", "--r-prime", "1"])
        assert cfg.command == "compare"
        assert cfg.params["d"] == 5
        assert cfg.params["n_bar"] == 4.0

    def test_figure_id_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["figure", "--id", "7"])

    def test_unknown_flag_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["compare", "--d", "5", "--n-bar", "4", "--frobnicate", "1"])

    def test_missing_family_parameter(self):
        with pytest.raises(UsageError):
            parse_args(["qcrb", "--family", "noon", "--d", "5"])

    def test_negative_value_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["compare", "--d", "5", "--n-bar", "-2"])

    def test_qcrb_valid(self):
        cfg = parse_args(["qcrb", "--family", "noon", "--d", "5", "--n", "2"])
        assert cfg.params["n"] == 2.0


class TestCommands:
    def test_qcrb_noon_value(self, capsys):
        assert main(["qcrb", "--family", "noon", "--d", "5", "--n", "2"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        header = out[0].split(",")
        row = out[1].split(",")
        assert float(row[header.index("qcrb")]) == 3.75

    def test_compare_emits_four_rows(self, tmp_path):
        target = tmp_path / "compare.csv"
        code = main(
            ["compare", "--d", "5", "--n-bar", "4", "--out", str(target)]
        )
        assert code == 0
        header, rows = _read_csv(target)
        assert [r[0] for r in rows] == ["noon", "ecs", "escs", "esvs"]
        qcrbs = [r[header.index("qcrb")] for r in rows]
        assert qcrbs[0] == pytest.approx(0.9375, abs=1e-9)
        assert all(a > b for a, b in zip(qcrbs, qcrbs[1:]))

    def test_sweep_escs(self, tmp_path):
        target = tmp_path / "sweep.csv"
        code = main(
            [
                "sweep-escs", "--d", "5", "--n-bar", "2",
                "--r-min", "0.4", "--r-max", "1.2", "--steps", "3",
                "--out", str(target),
            ]
        )
        assert code == 0
        header, rows = _read_csv(target)
        values = [r[header.index("qcrb")] for r in rows]
        assert values[0] > values[1] > values[2]

    def test_experiment(self, tmp_path):
        target = tmp_path / "exp.csv"
        assert main(["experiment", "--r", "1", "--out", str(target)]) == 0
        header, rows = _read_csv(target)
        row = rows[0]
        assert row[header.index("n_bar")] == pytest.approx(2.2462, abs=1e-3)
        assert row[header.index("abs_c1")] == pytest.approx(0.5338068, abs=1e-6)
        assert row[header.index("abs_c0")] == 0.0

    def test_computation_error_exit_code(self, capsys):
        # below the squeezed-coherent reachability floor at unit squeeze
        assert main(["compare", "--d", "1", "--n-bar", "0.5"]) == 1
        assert "error" in capsys.readouterr().err

    def test_usage_error_exit_code(self, capsys):
        assert main(["figure", "--id", "7"]) == 2
        assert "usage error" in capsys.readouterr().err


class TestFigures:
    def test_figure_2_columns_and_ordering(self, tmp_path):
        target = tmp_path / "fig2.csv"
        assert main(["figure", "--id", "2", "--steps", "8", "--out", str(target)]) == 0
        header, rows = _read_csv(target)
        assert header == ["n_bar", "noon", "ecs", "escs_r1", "esvs"]
        assert len(rows) == 8
        for row in rows:
            n_bar, noon, ecs, escs, esvs = row
            assert noon > ecs > escs > esvs
            assert noon == pytest.approx(15.0 / n_bar**2, rel=1e-9)

    def test_figure_3_columns(self, tmp_path):
        target = tmp_path / "fig3.csv"
        assert main(["figure", "--id", "3", "--steps", "6", "--out", str(target)]) == 0
        header, rows = _read_csv(target)
        assert header == ["n_bar", "ecs", "escs_r0.4", "escs_r0.8", "escs_r1.2", "esvs"]
        for row in rows:
            assert all(a > b for a, b in zip(row[1:], row[2:]))

    def test_figure_4_columns(self, tmp_path):
        target = tmp_path / "fig4.csv"
        assert main(["figure", "--id", "4", "--steps", "12", "--out", str(target)]) == 0
        header, rows = _read_csv(target)
        assert header == [
            "r", "n_bar_balanced", "qcrb_balanced", "n_bar_unbalanced", "qcrb_unbalanced"
        ]
        for row in rows:
            assert row[header.index("n_bar_unbalanced")] > 2.0

    def test_figure_6_columns_and_ordering(self, tmp_path):
        target = tmp_path / "fig6.csv"
        assert main(["figure", "--id", "6", "--steps", "5", "--out", str(target)]) == 0
        header, rows = _read_csv(target)
        assert header == ["n_bar", "noon_effective", "ecs", "phi"]
        for n_bar, noon, ecs, phi in rows:
            assert ecs < phi < noon
            assert 2.2 < n_bar < 2.51

    def test_determinism_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for target in (a, b):
            assert main(["figure", "--id", "2", "--steps", "6", "--out", str(target)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_json_format(self, tmp_path):
        target = tmp_path / "fig6.json"
        code = main(
            ["figure", "--id", "6", "--steps", "3", "--format", "json", "--out", str(target)]
        )
        assert code == 0
        payload = json.loads(target.read_text())
        assert payload["columns"] == ["n_bar", "noon_effective", "ecs", "phi"]
        assert len(payload["rows"]) == 3

    def test_output_dir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("NOONLIKE_OUTPUT_DIR", str(tmp_path))
        assert main(["figure", "--id", "2", "--steps", "4"]) == 0
        assert (tmp_path / "figure_2.csv").exists()


class TestRowFormatting:
    def test_twelve_significant_digits(self, tmp_path):
        target = tmp_path / "fig2.csv"
        main(["figure", "--id", "2", "--steps", "4", "--out", str(target)])
        line = target.read_text().splitlines()[1]
        for token in line.split(","):
            mantissa = token.replace("-", "").replace(".", "").split("e")[0].lstrip("0")
            assert len(mantissa) <= 12

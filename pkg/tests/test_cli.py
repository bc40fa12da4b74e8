"""Command-line behaviour: outputs, determinism, exit codes."""
from __future__ import annotations

import csv
import io

import numpy as np
import pytest

from lorenzel import cli


@pytest.fixture
def income_csv(tmp_path):
    rng = np.random.default_rng(17)
    rows = ["income,state"]
    for _ in range(80):
        rows.append(f"{rng.chisquare(3.0) * 10000:.2f},AZ")
    for _ in range(60):
        rows.append(f"{rng.chisquare(3.0) * 12000:.2f},CA")
    p = tmp_path / "income.csv"
    p.write_text("\n".join(rows) + "\n")
    return str(p)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCi:
    def test_table_shape_and_rows(self, income_csv, capsys):
        code, out, _ = run(["ci", "--input", income_csv, "--value-column", "income",
                            "--t", "0.25,0.5", "--methods", "el,tael"], capsys)
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["t", "estimate", "method", "lower", "upper", "length"]
        assert [(r[0], r[2]) for r in rows[1:]] == [
            ("0.25", "el"), ("0.25", "tael"), ("0.5", "el"), ("0.5", "tael")]
        for r in rows[1:]:
            lo, hi, ln = float(r[3]), float(r[4]), float(r[5])
            assert lo < float(r[1]) < hi
            assert ln == pytest.approx(hi - lo, abs=1e-3)

    def test_reruns_byte_identical(self, income_csv, tmp_path, capsys):
        args = ["ci", "--input", income_csv, "--value-column", "income",
                "--t", "0.5", "--methods", "all"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(args + ["--output", str(a)]) == 0
        assert cli.main(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_group_filter(self, income_csv, capsys):
        code, out, _ = run(["ci", "--input", income_csv, "--value-column", "income",
                            "--group-column", "state", "--group", "CA",
                            "--t", "0.5", "--methods", "el"], capsys)
        assert code == 0 and out.count("\n") == 2

    def test_raw_gives_full_precision(self, income_csv, capsys):
        code, out, _ = run(["ci", "--input", income_csv, "--value-column", "income",
                            "--t", "0.5", "--methods", "el", "--raw"], capsys)
        est = out.splitlines()[1].split(",")[1]
        assert len(est.split(".")[1]) > 4

    def test_missing_file_is_exit_3(self, capsys):
        code, _, err = run(["ci", "--input", "/no/such/file.csv",
                            "--value-column", "income"], capsys)
        assert code == 3 and "cannot read" in err

    def test_missing_column_is_exit_3(self, income_csv, capsys):
        code, _, err = run(["ci", "--input", income_csv,
                            "--value-column", "wages"], capsys)
        assert code == 3 and "wages" in err

    def test_degenerate_data_is_exit_4(self, tmp_path, capsys):
        p = tmp_path / "flat.csv"
        p.write_text("income\n" + "5\n" * 10)
        code, _, err = run(["ci", "--input", str(p), "--value-column", "income",
                            "--t", "0.5", "--methods", "el"], capsys)
        assert code == 4 and "DegenerateVariance" in err

    def test_unknown_method_is_exit_2(self, income_csv, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(["ci", "--input", income_csv, "--value-column", "income",
                      "--methods", "bootstrap"])
        assert e.value.code == 2

    @pytest.mark.parametrize("flag,val", [("--t", "0"), ("--t", "1"),
                                          ("--t", "junk"), ("--alpha", "1.0"),
                                          ("--alpha", "-0.1")])
    def test_bad_numbers_are_exit_2(self, income_csv, flag, val, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(["ci", "--input", income_csv, "--value-column", "income",
                      flag, val])
        assert e.value.code == 2


class TestSimulate:
    def test_smoke_and_determinism(self, tmp_path, capsys):
        args = ["simulate", "--population", "chisquare:3", "--n", "12", "--t", "0.5",
                "--reps", "8", "--methods", "el", "--seed", "9", "--quiet"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(args + ["--output", str(a)]) == 0
        assert cli.main(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        header, row = a.read_text().splitlines()
        assert header == "population,n,t,method,bias,mse,coverage,mean_length,failures"
        assert row.startswith("chisquare(3),12,0.5,el,")

    def test_seed_changes_output(self, tmp_path, capsys):
        base = ["simulate", "--n", "12", "--t", "0.5", "--reps", "8",
                "--methods", "none", "--quiet"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.main(base + ["--seed", "1", "--output", str(a)])
        cli.main(base + ["--seed", "2", "--output", str(b)])
        assert a.read_bytes() != b.read_bytes()

    def test_methods_none_leaves_interval_columns_empty(self, capsys):
        code, out, _ = run(["simulate", "--n", "10", "--t", "0.3", "--reps", "5",
                            "--methods", "none", "--quiet"], capsys)
        assert code == 0
        row = next(csv.reader(io.StringIO(out.splitlines()[1])))
        assert row[0] == "weibull(1,2)"
        assert row[3] == "" and row[6] == "" and row[7] == ""

    def test_progress_lines_on_stderr(self, capsys):
        code, out, err = run(["simulate", "--n", "10", "--t", "0.3,0.6",
                              "--reps", "3", "--methods", "el"], capsys)
        assert code == 0
        assert err.splitlines() == [
            "cell 1/2: n=10 t=0.3 method=el",
            "cell 2/2: n=10 t=0.6 method=el",
        ]

    def test_t_range_spec(self, capsys):
        code, out, _ = run(["simulate", "--n", "10", "--t", "0.2..0.6:0.2",
                            "--reps", "2", "--methods", "none", "--quiet"], capsys)
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert [r[2] for r in rows] == ["0.2", "0.4", "0.6"]

    def test_bad_population_is_exit_2(self, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(["simulate", "--population", "cauchy:0,1"])
        assert e.value.code == 2


class TestCurve:
    def test_writes_group_files(self, income_csv, tmp_path, capsys):
        outdir = tmp_path / "curves"
        code, out, _ = run(["curve", "--input", income_csv, "--value-column",
                            "income", "--group-column", "state", "--groups",
                            "AZ,CA", "--grid-step", "0.25",
                            "--output-dir", str(outdir)], capsys)
        assert code == 0
        names = sorted(p.name for p in outdir.iterdir())
        assert names == ["curve_ALL.csv", "curve_AZ.csv", "curve_CA.csv"]
        lines = (outdir / "curve_AZ.csv").read_text().splitlines()
        assert lines[0] == "t,lorenz,generalized,diagonal"
        assert [l.split(",")[0] for l in lines[1:]] == ["0.25", "0.5", "0.75"]

    def test_unknown_group_is_exit_3(self, income_csv, tmp_path, capsys):
        code, _, err = run(["curve", "--input", income_csv, "--value-column",
                            "income", "--group-column", "state", "--groups", "XX",
                            "--output-dir", str(tmp_path)], capsys)
        assert code == 3

    def test_groups_without_column_is_exit_2(self, income_csv, tmp_path, capsys):
        code, _, err = run(["curve", "--input", income_csv, "--value-column",
                            "income", "--groups", "AZ",
                            "--output-dir", str(tmp_path)], capsys)
        assert code == 2


class TestParser:
    def test_no_command_is_exit_2(self):
        with pytest.raises(SystemExit) as e:
            cli.main([])
        assert e.value.code == 2

    def test_t_comma_list(self):
        assert cli._parse_t_spec("0.1,0.55") == [0.1, 0.55]

    def test_t_range_default_step(self):
        assert cli._parse_t_spec("0.1..0.4") == [0.1, 0.2, 0.3, 0.4]

    def test_population_specs(self):
        assert cli._parse_population("weibull:1,2") == cli.Weibull(1.0, 2.0)
        assert cli._parse_population("chisq:3") == cli.ChiSquare(3.0)
        assert cli._parse_population("skewnormal:1,3,5") == cli.SkewNormal(1, 3, 5)

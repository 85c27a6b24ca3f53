import json
import math
from fractions import Fraction

import numpy as np
import pytest

from tripick import analytic, cli
from tripick.cli import main


def run_csv(capsys, argv):
    code = main(argv)
    text = capsys.readouterr().out
    return code, text


def parse_csv(text):
    """First CSV section as (header, rows-of-strings)."""
    lines = text.strip("\n").split("\n")
    try:
        split = lines.index("")
    except ValueError:
        split = len(lines)
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:split]]
    return header, rows


class TestMoments:
    def test_table_matches_exact_values(self, capsys):
        code, text = run_csv(capsys, ["moments", "--max-n", "7"])
        assert code == 0
        header, rows = parse_csv(text)
        assert header == ["n", "numerator", "denominator", "reduced", "decimal"]
        numerators = [2, 9, 80, 1240, 30240, 1071504, 51996672]
        reduced = ["1/4", "1/12", "5/144", "31/1800", "7/720", "1063/176400", "403/100800"]
        assert len(rows) == 7
        for row, n, num, red in zip(rows, range(1, 8), numerators, reduced):
            assert int(row[0]) == n
            assert int(row[1]) == num
            assert int(row[2]) == (n + 1) * math.factorial(n + 1) ** 2
            assert row[3] == red
            assert float(row[4]) == float(Fraction(red))

    def test_single_row(self, capsys):
        code, text = run_csv(capsys, ["moments", "--max-n", "1"])
        _, rows = parse_csv(text)
        assert rows == [["1", "2", "8", "1/4", "0.25"]]

    def test_large_orders_run_exactly(self, capsys):
        code, text = run_csv(capsys, ["moments", "--max-n", "50"])
        assert code == 0
        _, rows = parse_csv(text)
        assert len(rows) == 50
        decimals = [float(r[4]) for r in rows]
        assert all(b < a for a, b in zip(decimals, decimals[1:]))
        # big integers survive the round trip
        assert int(rows[-1][1]) == analytic.sequence_a279055(50)

    def test_json_shape(self, capsys):
        code, text = run_csv(capsys, ["moments", "--max-n", "2", "--format", "json"])
        obj = json.loads(text)
        assert obj["meta"]["command"] == "moments"
        assert obj["meta"]["version"]
        assert obj["rows"][0]["reduced"] == "1/4"
        assert obj["rows"][1]["decimal"] == pytest.approx(1 / 12)


class TestDist:
    def test_includes_breakpoint_row(self, capsys):
        code, text = run_csv(capsys, ["dist", "--grid-points", "7"])
        assert code == 0
        header, rows = parse_csv(text)
        assert header == ["c", "cdf", "pdf"]
        cs = [float(r[0]) for r in rows]
        assert 0.25 in cs
        at = rows[cs.index(0.25)]
        assert float(at[1]) == analytic.CDF_AT_QUARTER
        assert float(at[2]) == analytic.PDF_AT_QUARTER

    def test_final_row_is_supremum(self, capsys):
        _, text = run_csv(capsys, ["dist", "--grid-points", "10"])
        _, rows = parse_csv(text)
        assert [float(v) for v in rows[-1]] == [1.0, 1.0, 0.0]

    def test_cdf_column_monotone(self, capsys):
        _, text = run_csv(capsys, ["dist", "--grid-points", "400"])
        _, rows = parse_csv(text)
        values = [float(r[1]) for r in rows]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_which_selects_columns(self, capsys):
        _, text = run_csv(capsys, ["dist", "--grid-points", "4", "--which", "cdf"])
        header, _ = parse_csv(text)
        assert header == ["c", "cdf"]

    def test_csv_round_trip_is_exact(self, capsys):
        _, text = run_csv(capsys, ["dist", "--grid-points", "50"])
        _, rows = parse_csv(text)
        for row in rows:
            c = float(row[0])
            assert float(row[1]) == analytic.cdf(c)
            assert float(row[2]) == analytic.pdf(c)

    def test_levelset_points_lie_on_surface(self, capsys):
        code, text = run_csv(capsys, ["dist", "--levelset", "0.3", "--grid-points", "40"])
        assert code == 0
        header, rows = parse_csv(text)
        assert header == ["r", "s", "t"]
        assert rows
        for row in rows:
            r, s, t = (float(v) for v in row)
            assert 0.0 <= r <= 1.0
            q = r * s * t + (1 - r) * (1 - s) * (1 - t)
            assert q == pytest.approx(0.3, abs=1e-12)


class TestSimulate:
    def test_histogram_summary_and_fit(self, capsys):
        code, text = run_csv(
            capsys, ["simulate", "--n", "100000", "--bins", "100", "--seed", "0"]
        )
        assert code == 0
        lines = text.strip("\n").split("\n")
        header, rows = parse_csv(text)
        assert header == ["bin_lo", "bin_hi", "count", "empirical_density", "analytic_density"]
        assert len(rows) == 100
        counts = [int(r[2]) for r in rows]
        assert sum(counts) == 100_000
        # summary section: header + row after the blank line
        summary_header = lines[-2].split(",")
        summary = dict(zip(summary_header, (float(v) for v in lines[-1].split(","))))
        assert summary_header == ["mean", "ks_statistic", "ks_scaled"]
        assert abs(summary["mean"] - 0.25) < 5 * (1 / (4 * math.sqrt(3))) / math.sqrt(100_000)
        assert summary["ks_scaled"] < 1.95

    def test_byte_identical_reruns(self, capsys):
        _, first = run_csv(capsys, ["simulate", "--n", "20000", "--seed", "9"])
        _, second = run_csv(capsys, ["simulate", "--n", "20000", "--seed", "9"])
        assert first == second

    def test_workers_flag_does_not_change_output(self, capsys):
        _, one = run_csv(capsys, ["simulate", "--n", "150000", "--seed", "4"])
        _, four = run_csv(capsys, ["simulate", "--n", "150000", "--seed", "4", "--workers", "4"])
        assert one == four

    def test_json_summary(self, capsys):
        _, text = run_csv(
            capsys, ["simulate", "--n", "20000", "--seed", "2", "--format", "json"]
        )
        obj = json.loads(text)
        assert obj["meta"]["seed"] == 2
        assert len(obj["rows"]) == 100
        assert set(obj["summary"]) == {"mean", "ks_statistic", "ks_scaled"}

    def test_rejects_tiny_n(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--n", "50"])
        assert exc.value.code == 2


class TestTable3:
    def test_single_size_report(self, capsys):
        code, text = run_csv(
            capsys, ["table3", "--sizes", "10000", "--trials", "10", "--seed", "1"]
        )
        assert code == 0
        header, rows = parse_csv(text)
        assert header == ["n", "observed_mean_abs_err", "theoretical", "ratio"]
        assert len(rows) == 1
        n, observed, theoretical, ratio = rows[0]
        assert int(n) == 10000
        expected = math.sqrt(2.0 / (10000 * math.pi)) / (4.0 * math.sqrt(3.0))
        assert float(theoretical) == pytest.approx(expected, rel=1e-15)
        assert float(ratio) == pytest.approx(float(observed) / float(theoretical), rel=1e-12)

    def test_scientific_size_syntax(self, capsys):
        code, text = run_csv(
            capsys, ["table3", "--sizes", "1e2,1e3", "--trials", "5", "--seed", "0"]
        )
        _, rows = parse_csv(text)
        assert [int(r[0]) for r in rows] == [100, 1000]

    def test_theoretical_column_decreasing(self, capsys):
        _, text = run_csv(
            capsys, ["table3", "--sizes", "100,1000,10000", "--trials", "5"]
        )
        _, rows = parse_csv(text)
        theory = [float(r[2]) for r in rows]
        assert theory[0] > theory[1] > theory[2]


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, text = run_csv(capsys, ["verify"])
        assert code == 0
        header, rows = parse_csv(text)
        assert header == ["check", "max_deviation", "tolerance", "passed"]
        assert len(rows) == 6
        assert all(row[3] == "1" for row in rows)
        for row in rows:
            assert float(row[1]) <= float(row[2])

    def test_injected_defect_fails(self, capsys, monkeypatch):
        # flip the sign of the upper-branch arctangent correction
        def broken_cdf(c):
            arr = np.asarray(c, dtype=float)
            out = np.atleast_1d(np.asarray(original(arr), dtype=float)).copy()
            flat = np.atleast_1d(arr).ravel()
            hi = flat > 0.2500001
            if hi.any():
                x = flat[hi]
                d = 4.0 * x - 1.0
                g = np.sqrt(d)
                out[hi] = x - (3.0 * x - 0.5) * np.log(x) - d * g * (np.arctan(g) - np.pi / 3.0)
            if arr.ndim == 0:
                return float(out[0])
            return out.reshape(arr.shape)

        original = analytic.cdf
        monkeypatch.setattr(analytic, "cdf", broken_cdf)
        results = cli.verify_checks()
        by_name = {r.name: r for r in results}
        assert not by_name["cdf-vs-nested-quadrature"].passed
        code = main(["verify"])
        assert code == 1
        capsys.readouterr()


class TestInterface:
    def test_unknown_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_flag_value_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["moments", "--max-n", "0"])
        assert exc.value.code == 2

    def test_out_writes_file(self, tmp_path, capsys):
        target = tmp_path / "table.csv"
        code = main(["moments", "--max-n", "3", "--out", str(target)])
        assert code == 0
        assert capsys.readouterr().out == ""
        text = target.read_text()
        header, rows = parse_csv(text)
        assert len(rows) == 3
        assert text.endswith("\n")

    def test_seventeen_digit_reals(self, capsys):
        _, text = run_csv(capsys, ["dist", "--grid-points", "3", "--which", "pdf"])
        _, rows = parse_csv(text)
        # grid is {1/3, 2/3, 1} plus the inserted 0.25 row, sorted;
        # 1/3 prints with 17 significant digits and round-trips exactly
        assert rows[1][0] == "0.33333333333333331"
        assert float(rows[1][0]) == 1 / 3

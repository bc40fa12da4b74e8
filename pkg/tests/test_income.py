"""Income CSV ingestion and Lorenz curve evaluation."""
from __future__ import annotations

import io

import numpy as np
import pytest

import lorenzel as lz


def write(tmp_path, text, name="incomes.csv"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestLoadCsv:
    def test_happy_path(self, tmp_path):
        path = write(tmp_path, "county,state,income\na,AZ,100\nb,CA,250\nc,AZ,175\n")
        table = lz.load_csv(path, "income", "state")
        assert table.values.tolist() == [100.0, 250.0, 175.0]
        assert table.groups == ("AZ", "CA", "AZ")
        assert table.dropped == 0
        assert table.group_labels() == ("AZ", "CA")

    def test_drops_bad_rows_with_warning(self, tmp_path):
        path = write(tmp_path, "income,state\n100,AZ\n,CA\nn/a,NV\n250,AZ\ninf,CA\n")
        with pytest.warns(UserWarning, match="dropped 3"):
            table = lz.load_csv(path, "income")
        assert table.values.tolist() == [100.0, 250.0]
        assert table.dropped == 3
        assert table.groups is None

    def test_missing_file(self, tmp_path):
        with pytest.raises(lz.FileError):
            lz.load_csv(str(tmp_path / "nope.csv"), "income")

    def test_missing_columns(self, tmp_path):
        path = write(tmp_path, "a,b\n1,2\n")
        with pytest.raises(lz.SchemaError):
            lz.load_csv(path, "income")
        with pytest.raises(lz.SchemaError):
            lz.load_csv(path, "a", "state")

    def test_filter(self, tmp_path):
        path = write(tmp_path, "income,state\n1,AZ\n2,CA\n3,AZ\n4,NV\n")
        table = lz.load_csv(path, "income", "state")
        az = table.filter("AZ")
        assert az.values.tolist() == [1.0, 3.0]
        with pytest.raises(lz.SchemaError):
            lz.load_csv(path, "income").filter("AZ")

    def test_sample_roundtrip(self, tmp_path):
        path = write(tmp_path, "income\n3\n1\n2\n")
        s = lz.load_csv(path, "income").sample()
        assert s.values.tolist() == [1.0, 2.0, 3.0]


class TestCurve:
    def test_toy_values(self):
        s = lz.Sample([1.0, 2.0, 3.0, 4.0, 5.0])
        pts = lz.curve(s, [0.4, 0.9])
        assert pts.mu_hat == 3.0
        assert pts.generalized.tolist() == [0.6, 3.0]
        # 0.6 / 3.0 rounds to the double just below 0.2
        assert pts.lorenz.tolist() == pytest.approx([0.2, 1.0], rel=1e-15)

    def test_closes_exactly_at_one(self):
        rng = np.random.default_rng(2)
        s = lz.Sample(rng.chisquare(3.0, 101))
        pts = lz.curve(s, [0.995])  # ceil(101 * 0.995) = 101: everything included
        assert pts.lorenz[-1] == 1.0  # bit-exact, same summation both sides

    def test_equal_incomes_curve_hits_one(self):
        # with all values tied, every t includes the whole sample
        s = lz.Sample([7.0, 7.0, 7.0, 7.0])
        pts = lz.curve(s, [0.25, 0.5, 0.75])
        assert pts.lorenz.tolist() == [1.0, 1.0, 1.0]

    def test_monotone_nondecreasing(self):
        rng = np.random.default_rng(3)
        s = lz.Sample(rng.lognormal(0.0, 1.0, 57))
        grid = [i / 100 for i in range(1, 100)]
        pts = lz.curve(s, grid)
        assert np.all(np.diff(pts.generalized) >= 0.0)
        assert np.all(np.diff(pts.lorenz) >= 0.0)

    def test_lorenz_below_diagonal_scale_free(self):
        rng = np.random.default_rng(4)
        x = rng.weibull(1.5, 200) * 3.0
        grid = [i / 10 for i in range(1, 10)]
        pts = lz.curve(lz.Sample(x), grid)
        assert np.all(pts.lorenz <= np.asarray(grid) + 1e-12)
        scaled = lz.curve(lz.Sample(1000.0 * x), grid)
        assert scaled.lorenz == pytest.approx(pts.lorenz.tolist(), rel=1e-12)

    def test_row_order_irrelevant(self, tmp_path):
        a = write(tmp_path, "v\n5\n1\n3\n2\n4\n", "a.csv")
        b = write(tmp_path, "v\n1\n2\n3\n4\n5\n", "b.csv")
        grid = [0.2, 0.4, 0.6, 0.8]
        pa = lz.curve(lz.load_csv(a, "v").sample(), grid)
        pb = lz.curve(lz.load_csv(b, "v").sample(), grid)
        assert pa.generalized.tolist() == pb.generalized.tolist()


class TestWriteCurveCsv:
    def test_format(self):
        s = lz.Sample([1.0, 2.0, 3.0, 4.0, 5.0])
        pts = lz.curve(s, [0.4, 0.9])
        buf = io.StringIO()
        lz.write_curve_csv(pts, buf, precision=4)
        assert buf.getvalue() == (
            "t,lorenz,generalized,diagonal\n"
            "0.4,0.2000,0.6000,0.4\n"
            "0.9,1.0000,3.0000,0.9\n"
        )

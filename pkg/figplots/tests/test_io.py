import pytest

from figplots import SchemaError, read_table, require_columns


class TestReadTable:
    def test_columns_and_typed_cells(self, spectrum_csv):
        t = read_table(spectrum_csv)
        assert t.columns == ["q", "root_index", "re_z", "im_z",
                             "stability", "residual"]
        assert len(t.rows) == 6
        r0 = t.rows[0]
        assert r0["q"] == 1.0 and r0["re_z"] == -1.1
        assert r0["stability"] == "Stable"

    def test_booleans(self, density_csv):
        t = read_table(density_csv)
        assert t.rows[0]["diverged"] is False
        assert t.rows[2]["diverged"] is True

    def test_comments_and_error_markers_skipped(self, spectrum_csv):
        t = read_table(spectrum_csv)
        assert any("ERROR q=2" in c for c in t.comments)
        assert all(isinstance(r["q"], float) for r in t.rows)

    def test_distinct_and_where(self, zeno_csv):
        t = read_table(zeno_csv)
        assert t.distinct("r") == [0.1, 1.0, 10.0]
        assert len(t.where("r", 0.1)) == 3

    def test_empty_rejected(self, tmp_path):
        p = tmp_path / "empty.csv"
        p.write_text("# kosc 0.1.0\nq,r,alpha,xi,regime,convention\n")
        with pytest.raises(SchemaError, match="no data rows"):
            read_table(p)

    def test_headerless_rejected(self, tmp_path):
        p = tmp_path / "bare.csv"
        p.write_text("# only comments here\n")
        with pytest.raises(SchemaError):
            read_table(p)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_table(tmp_path / "nope.csv")


class TestRequireColumns:
    def test_names_first_missing_column(self, zeno_csv):
        t = read_table(zeno_csv)
        with pytest.raises(SchemaError, match="im_z"):
            require_columns(t, ("q", "im_z", "re_z"))

    def test_passes_on_subset(self, zeno_csv):
        require_columns(read_table(zeno_csv), ("q", "r", "xi"))

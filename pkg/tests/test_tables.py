"""Bounds-table model and snapshot file format."""

import pytest

from plotkin import LIMITS, BoundsTable, TableError, load_snapshot, save_snapshot


def test_limits_are_the_expected_ranges():
    assert LIMITS == {2: 256, 3: 243, 4: 256, 5: 130, 7: 100, 8: 130, 9: 130}


def test_add_and_query():
    t = BoundsTable()
    t.add(4, 63, 42, 12)
    t.add(4, 63, 53, 6, 7)
    assert t.query(4, 63, 42) == (12, None)
    assert t.query(4, 63, 53) == (6, 7)
    assert t.query(4, 63, 1) is None
    assert t.dims_at(4, 63) == [42, 53]
    assert len(t) == 2


def test_add_validation():
    t = BoundsTable()
    with pytest.raises(TableError, match="unsupported"):
        t.add(6, 10, 5, 2)
    with pytest.raises(TableError, match="1 <= k <= n"):
        t.add(4, 10, 11, 2)
    with pytest.raises(TableError, match="1 <= k <= n"):
        t.add(4, 300, 5, 2)
    with pytest.raises(TableError, match="d_low must be"):
        t.add(4, 10, 5, 0)
    with pytest.raises(TableError, match="Singleton"):
        t.add(4, 10, 5, 7)
    with pytest.raises(TableError, match="d_high=1 < d_low"):
        t.add(4, 10, 5, 2, 1)
    with pytest.raises(TableError, match="Singleton"):
        t.add(4, 10, 5, 2, 7)
    t.add(4, 10, 5, 2)
    with pytest.raises(TableError, match="duplicate"):
        t.add(4, 10, 5, 3)


def test_snapshot_round_trip(tmp_path):
    t = BoundsTable()
    t.add(3, 62, 46, 8)
    t.add(4, 63, 53, 6, 7)
    t.add(2, 10, 5, 4, 4)
    path = tmp_path / "snap.tbl"
    save_snapshot(path, t)
    assert path.read_text() == "2 10 5 4 4\n3 62 46 8 -\n4 63 53 6 7\n"
    assert load_snapshot(path) == t


def test_snapshot_comments_and_blanks(tmp_path):
    path = tmp_path / "snap.tbl"
    path.write_text("# header\n\n3 62 46 8 -  # trailing note\n")
    t = load_snapshot(path)
    assert t.query(3, 62, 46) == (8, None)


def test_snapshot_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.tbl"
    path.write_text("3 62 46 8 -\n3 62 46\n")
    with pytest.raises(TableError, match=r"bad\.tbl:2"):
        load_snapshot(path)
    path.write_text("3 62 46 8 x\n")
    with pytest.raises(TableError, match=r"bad\.tbl:1.*non-integer"):
        load_snapshot(path)
    path.write_text("3 62 46 8 -\n3 62 46 9 -\n")
    with pytest.raises(TableError, match=r"bad\.tbl:2.*duplicate"):
        load_snapshot(path)


def test_bundled_snapshot_loads():
    import os

    here = os.path.dirname(__file__)
    t = load_snapshot(os.path.join(here, "..", "fixtures", "paper_sixteen.tbl"))
    assert t.query(3, 62, 46) == (8, None)
    assert t.query(4, 63, 42) == (12, None)
    assert t.query(4, 126, 95) == (11, None)
    assert len(t) == 34

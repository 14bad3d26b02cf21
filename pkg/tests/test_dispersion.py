import numpy as np
import pytest

from classrank import (
    EmptyInput,
    InstructorRecord,
    MalformedInput,
    aggregate,
    dispersion_row,
    mode_of,
    read_dispersion_csv,
)
from classrank.data import clarity_counts_path, helpfulness_counts_path
from goldens import CLARITY, HELPFULNESS, PCT_TOL


def test_mode_basic():
    assert mode_of([4, 4, 3, 4, 5]) == 4
    assert mode_of([3]) == 3


def test_mode_tiebreaks():
    assert mode_of([1, 1, 5, 5]) == 1
    assert mode_of([1, 1, 5, 5], tiebreak="largest") == 5
    with pytest.raises(ValueError):
        mode_of([1, 2], tiebreak="median")


def test_mode_empty():
    with pytest.raises(EmptyInput):
        mode_of([])


def test_mode_is_order_invariant():
    rng = np.random.default_rng(5)
    for _ in range(50):
        values = rng.integers(1, 6, size=int(rng.integers(1, 30))).tolist()
        shuffled = list(values)
        rng.shuffle(shuffled)
        assert mode_of(values) == mode_of(shuffled)


def test_dispersion_row_counts():
    row = dispersion_row(InstructorRecord("a", (5, 5, 3, 1, 2)))
    assert (row.mode, row.dev2, row.dev3plus) == (5, 1, 2)


def test_dispersion_row_all_identical():
    row = dispersion_row(InstructorRecord("b", (4,) * 12))
    assert (row.mode, row.dev2, row.dev3plus) == (4, 0, 0)


def test_dispersion_row_respects_tiebreak():
    record = InstructorRecord("c", (1, 1, 5, 5, 3))
    smallest = dispersion_row(record)
    largest = dispersion_row(record, tiebreak="largest")
    assert (smallest.mode, smallest.dev2, smallest.dev3plus) == (1, 1, 2)
    assert (largest.mode, largest.dev2, largest.dev3plus) == (5, 1, 2)


def test_deviation_buckets_partition_the_ratings():
    rng = np.random.default_rng(9)
    for _ in range(100):
        values = tuple(rng.integers(1, 6, size=int(rng.integers(1, 40))).tolist())
        row = dispersion_row(InstructorRecord("x", values))
        anchor = row.mode
        dev0 = sum(1 for v in values if v == anchor)
        dev1 = sum(1 for v in values if abs(v - anchor) == 1)
        assert dev0 + dev1 + row.dev2 + row.dev3plus == len(values)


def test_reflection_flips_the_anchor():
    rng = np.random.default_rng(13)
    for _ in range(100):
        values = tuple(rng.integers(1, 6, size=int(rng.integers(1, 25))).tolist())
        reflected = tuple(6 - v for v in values)
        # reflection maps a smallest-tied mode to a largest-tied one
        row = dispersion_row(InstructorRecord("x", values), tiebreak="smallest")
        mirrored = dispersion_row(
            InstructorRecord("x", reflected), tiebreak="largest"
        )
        assert mirrored.mode == 6 - row.mode
        assert (mirrored.dev2, mirrored.dev3plus) == (row.dev2, row.dev3plus)


def test_aggregate_golden_helpfulness():
    rows, excluded = read_dispersion_csv(helpfulness_counts_path())
    assert len(rows) == 91 and excluded == []
    pooled = aggregate(rows)
    assert pooled.total_n == HELPFULNESS["total_n"]
    assert pooled.total_dev2 == HELPFULNESS["total_dev2"]
    assert pooled.total_dev3plus == HELPFULNESS["total_dev3plus"]
    assert pooled.pct_dev2 == pytest.approx(HELPFULNESS["pct_dev2"], abs=PCT_TOL)
    assert pooled.pct_dev3plus == pytest.approx(
        HELPFULNESS["pct_dev3plus"], abs=PCT_TOL
    )
    assert pooled.pct_dev2plus == pytest.approx(
        HELPFULNESS["pct_dev2plus"], abs=PCT_TOL
    )


def test_aggregate_golden_clarity():
    rows, _ = read_dispersion_csv(clarity_counts_path())
    pooled = aggregate(rows)
    assert pooled.total_n == CLARITY["total_n"]
    assert pooled.pct_dev2 == pytest.approx(CLARITY["pct_dev2"], abs=PCT_TOL)
    assert pooled.pct_dev3plus == pytest.approx(CLARITY["pct_dev3plus"], abs=PCT_TOL)
    assert pooled.pct_dev2plus == pytest.approx(CLARITY["pct_dev2plus"], abs=PCT_TOL)


def test_aggregate_single_row():
    row = dispersion_row(InstructorRecord("solo", (4, 4, 4, 4, 2, 1, 4, 4, 4, 4)))
    pooled = aggregate([row])
    assert pooled.pct_dev2 == pytest.approx(10.0, abs=1e-12)
    assert pooled.pct_dev3plus == pytest.approx(10.0, abs=1e-12)


def test_aggregate_matches_count_weighted_rows():
    rng = np.random.default_rng(17)
    rows = [
        dispersion_row(
            InstructorRecord(
                f"i{k}",
                tuple(rng.integers(1, 6, size=int(rng.integers(5, 60))).tolist()),
            )
        )
        for k in range(30)
    ]
    pooled = aggregate(rows)
    assert pooled.pct_dev2 == pytest.approx(
        100.0 * sum(r.dev2 for r in rows) / sum(r.n for r in rows), abs=1e-12
    )


def test_aggregate_empty_rejected():
    with pytest.raises(EmptyInput):
        aggregate([])


def test_long_form_csv(tmp_path):
    path = tmp_path / "ratings.csv"
    path.write_text(
        "label,rating\n"
        + "\n".join(["a,4"] * 5 + ["a,1", "b,5", "b,5", "b,4", "b,5", "b,3"])
        + "\n",
        encoding="utf-8",
    )
    rows, excluded = read_dispersion_csv(path, min_n=5)
    assert [row.label for row in rows] == ["a", "b"]
    assert excluded == []
    a_row = rows[0]
    assert (a_row.n, a_row.mode, a_row.dev2, a_row.dev3plus) == (6, 4, 0, 1)


def test_long_form_min_n_filter(tmp_path):
    path = tmp_path / "ratings.csv"
    path.write_text(
        "label,rating\na,4\na,4\na,4\na,4\na,4\nb,5\nb,5\n", encoding="utf-8"
    )
    rows, excluded = read_dispersion_csv(path, min_n=5)
    assert [row.label for row in rows] == ["a"]
    assert excluded == ["b"]


def test_counted_form_min_n_filter(tmp_path):
    path = tmp_path / "counts.csv"
    path.write_text(
        "label,n,mode,dev2,dev3plus\na,10,4,1,0\nb,3,5,0,0\n", encoding="utf-8"
    )
    rows, excluded = read_dispersion_csv(path, min_n=5)
    assert [row.label for row in rows] == ["a"]
    assert excluded == ["b"]


def test_malformed_csv_rejected(tmp_path):
    bad_header = tmp_path / "one.csv"
    bad_header.write_text("name,score\na,4\n", encoding="utf-8")
    with pytest.raises(MalformedInput):
        read_dispersion_csv(bad_header)

    bad_counts = tmp_path / "two.csv"
    bad_counts.write_text("label,n,mode,dev2,dev3plus\na,4,4,3,2\n", encoding="utf-8")
    with pytest.raises(MalformedInput):
        read_dispersion_csv(bad_counts)

    bad_value = tmp_path / "three.csv"
    bad_value.write_text("label,rating\na,excellent\n", encoding="utf-8")
    with pytest.raises(MalformedInput):
        read_dispersion_csv(bad_value)

    empty = tmp_path / "four.csv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(MalformedInput):
        read_dispersion_csv(empty)


def test_empty_record_rejected():
    with pytest.raises(EmptyInput):
        InstructorRecord("empty", ())

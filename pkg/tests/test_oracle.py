import csv
import io
import json

import pytest

from qdecreasing.oracle import STATISTICS, verify, verify_covers_equivalence

TEST_Q = ["1", "2", "3", "1/2", "1/3", "2/3", "3/2", "5/2"]


def test_w5_row():
    rep = verify("1", 5)
    assert rep.passed
    assert rep.row(5) == {"words": 13, "coverings": 20, "intervals": 56, "join_irr": 5, "meet_irr": 7}


def test_two_chain_row():
    assert verify("1", 1).row(1) == {"words": 2, "coverings": 1, "intervals": 3, "join_irr": 1, "meet_irr": 1}


def test_meet_column_5_2():
    rep = verify("5/2", 9)
    assert [b for _, b, _, _ in rep.table("meet_irr")] == [1, 2, 3, 6, 9, 13, 23, 34, 52]


@pytest.mark.parametrize("q", TEST_Q)
def test_verify_passes(q):
    rep = verify(q, 12)
    assert rep.passed and not rep.mismatches
    assert len(rep.rows) == 12 * len(STATISTICS)


def test_truncation_marker():
    rep = verify("3", 14, cap=500)
    assert rep.truncated_at is not None and not rep.passed
    assert "TRUNCATED" in rep.to_csv()
    assert json.loads(rep.to_json())["truncated_at"] == rep.truncated_at


def test_serialization_is_deterministic():
    a, b = verify("2/3", 6), verify("2/3", 6)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()
    data = json.loads(a.to_json())
    assert data["pass"] is True and set(data["statistics"]) == set(STATISTICS)
    assert "seconds" not in data and "seconds" in json.loads(a.to_json(timing=True))
    rows = list(csv.DictReader(io.StringIO(a.to_csv())))
    assert len(rows) == 6 * len(STATISTICS)


def test_verify_errors():
    with pytest.raises(ValueError):
        verify("1", 0)
    with pytest.raises(ValueError):
        verify("sqrt2", 3)


@pytest.mark.parametrize("q", ["1", "2/3"])
def test_covers_equivalence_examples(q):
    assert verify_covers_equivalence(q, 8)
    assert verify_covers_equivalence(q, 1)

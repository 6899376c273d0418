import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from viciouswalk.tableaux import (
    NumberedDiagram,
    Partition,
    TableauError,
    column_insert,
    column_insert_path,
    lds,
    reverse_column_insert,
)

from oracles import lds_exhaustive


def build(values):
    d = NumberedDiagram.empty()
    for v in values:
        d = column_insert(d, v)
    return d


distinct_lists = st.lists(st.integers(1, 60), unique=True, max_size=14)


def test_partition_normalises_trailing_zeros():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)
    assert Partition.from_columns((2, 1)).parts == (2, 1)
    assert Partition.from_columns((3, 1)).parts == (2, 1, 1)
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    with pytest.raises(TableauError):
        Partition((1, 2))


def test_diagram_invariants_enforced():
    with pytest.raises(TableauError):
        NumberedDiagram.from_rows([[2, 1]])
    with pytest.raises(TableauError):
        NumberedDiagram.from_rows([[1, 2], [3, 2]])
    with pytest.raises(TableauError):
        NumberedDiagram.from_rows([[1], [2, 3]])
    d = NumberedDiagram.from_rows([[1, 2], [3]])
    assert d.shape == Partition((2, 1))
    assert d.labels == {(1, 1): 1, (1, 2): 2, (2, 1): 3}


def test_insert_into_empty():
    assert column_insert(NumberedDiagram.empty(), 5).rows == ((5,),)


def test_insert_larger_than_column_appends_below():
    col = NumberedDiagram.from_rows([[2], [3]])
    assert column_insert(col, 5).rows == ((2,), (3,), (5,))


def test_insert_bumps_into_next_column():
    # the step 3 -> 2 of the backward construction for array (3 4 6 / 1 2 5)
    assert column_insert(NumberedDiagram.from_rows([[2]]), 1).rows == ((1, 2),)
    d, end = column_insert_path(NumberedDiagram.from_rows([[2], [3]]), 1)
    assert d.rows == ((1, 2), (3,)) and end == 2


def test_insert_duplicate_rejected():
    with pytest.raises(TableauError):
        column_insert(NumberedDiagram.from_rows([[2]]), 2)


def test_reverse_insert_figure2_steps():
    d = NumberedDiagram.from_rows([[1, 2], [3]])
    d4, x4 = reverse_column_insert(d, 2)
    assert (d4.rows, x4) == (((2,), (3,)), 1)
    d5, x5 = reverse_column_insert(d4, 1)
    assert (d5.rows, x5) == (((2,),), 3)


def test_reverse_insert_single_box():
    d, x = reverse_column_insert(NumberedDiagram.from_rows([[7]]), 1)
    assert d == NumberedDiagram.empty() and x == 7


def test_reverse_insert_errors():
    d = NumberedDiagram.from_rows([[1, 2], [3, 4]])
    with pytest.raises(TableauError):
        reverse_column_insert(d, 1)  # (2,1) is not a corner
    with pytest.raises(TableauError):
        reverse_column_insert(d, 3)


@given(distinct_lists)
def test_insert_then_reverse_at_end_column(values):
    d = build(values[:-1]) if values else NumberedDiagram.empty()
    if not values:
        return
    v = values[-1]
    grown, end = column_insert_path(d, v)
    assert len(grown) == len(d) + 1
    back, ejected = reverse_column_insert(grown, end)
    assert back == d and ejected == v


@given(distinct_lists)
def test_reverse_then_insert_restores(values):
    d = build(values)
    cols = d.columns
    for j in range(1, len(cols) + 1):
        if j < len(cols) and len(cols[j]) == len(cols[j - 1]):
            continue
        smaller, x = reverse_column_insert(d, j)
        assert column_insert(smaller, x) == d


def test_json_round_trip():
    d = build([5, 2, 9, 1, 7])
    obj = json.loads(json.dumps(d.to_json()))
    assert NumberedDiagram.from_json(obj) == d


@pytest.mark.parametrize("seq, expected", [
    ([2, 1, 4, 3], 2),
    ([4, 3, 2, 1], 4),
    ([1, 3, 2], 2),
    ([], 0),
])
def test_lds_examples(seq, expected):
    assert lds(seq) == expected
    assert lds_exhaustive(seq) == expected


def test_lds_duplicates_rejected():
    with pytest.raises(TableauError):
        lds([1, 2, 2])


def test_lds_matches_exhaustive_up_to_length_10():
    rng = random.Random(11)
    for n in range(11):
        for _ in range(40):
            seq = rng.sample(range(1, 30), n)
            assert lds(seq) == lds_exhaustive(seq)


@settings(max_examples=50)
@given(st.integers(0, 200))
def test_lds_monotone_extremes(n):
    assert lds(list(range(n, 0, -1))) == n
    assert lds(list(range(1, n + 1))) == min(n, 1)

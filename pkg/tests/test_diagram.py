import pytest
from hypothesis import given
from hypothesis import strategies as st

from trischur.diagram import COLUMNS, Diagram3, Partition3, as_partition, canonicalize, total_boxes


def test_canonicalize_examples():
    assert canonicalize([{2, 3}, {1}]).m == (1, 0, 0, 0, 1, 0, 0)
    assert canonicalize([{1, 2}, {1, 2}])[{1, 2}] == 2
    assert sum(canonicalize([{1, 2}, {1, 2}]).m) == 2
    assert canonicalize([]) == Diagram3.zero()


@pytest.mark.parametrize("bad", [[set()], [{1, 4}], [{0}]])
def test_canonicalize_rejects(bad):
    with pytest.raises(ValueError):
        canonicalize(bad)


@given(st.lists(st.sampled_from(COLUMNS), max_size=10), st.randoms())
def test_canonicalize_order_independent(cols, rnd):
    shuffled = list(cols)
    rnd.shuffle(shuffled)
    assert canonicalize(cols) == canonicalize(shuffled)
    assert canonicalize(cols).columns() == sorted(cols, key=COLUMNS.index)


def test_as_partition():
    assert as_partition(Diagram3((1, 0, 0, 1, 0, 0, 1))) == Partition3((3, 2, 1))
    assert as_partition(Diagram3.zero()) == Partition3((0, 0, 0))
    assert as_partition(Diagram3((0, 0, 0, 0, 1, 0, 0))) is None
    assert Diagram3.from_partition((4, 2, 1)).as_partition().parts == (4, 2, 1)


def test_total_boxes():
    assert total_boxes(Diagram3((1,) * 7)) == 12
    assert total_boxes(Diagram3((0, 0, 0, 0, 0, 0, 1))) == 3
    assert total_boxes(Diagram3.zero()) == 0


def test_text_round_trip_and_errors():
    d = Diagram3.parse("1,0,0,1,0,0,1")
    assert str(d) == "1,0,0,1,0,0,1"
    for bad in ("1,2,3", "1,0,0,0,0,0,-1", "a,b"):
        with pytest.raises(ValueError):
            Diagram3.parse(bad)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition3((1, 2, 0))
    with pytest.raises(ValueError):
        Partition3((1, 0, -1))

import pytest

from qpower.handlers.table_handler import BadRange, TableHandler, UnknownFamily
from qpower.oracle.trees import MAX_TREE_SIZE
from qpower.symfun.qpowers import q_power


def test_rows_start_at_the_family_start():
    rows = TableHandler().rows("hermite1", None, 2)
    assert [n for n, _ in rows] == [0, 1, 2]
    assert rows[2][1].render() == "x^2 − (1 − q)"
    assert [n for n, _ in TableHandler().rows("jtree", None, 3)] == [1, 2, 3]


def test_power_rows_use_the_base():
    rows = TableHandler(base_m=-1).rows("p", 2, 3)
    assert rows == [(2, q_power(2, -1)), (3, q_power(3, -1))]


def test_bad_ranges():
    handler = TableHandler()
    with pytest.raises(BadRange):
        handler.rows("jtree", 0, 3)
    with pytest.raises(BadRange):
        handler.rows("hermite2", 3, 2)
    with pytest.raises(BadRange):
        handler.rows("jtree", 1, MAX_TREE_SIZE + 1)


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        TableHandler().rows("laguerre", None, 3)
    assert TableHandler().family("hermite2").start == 0

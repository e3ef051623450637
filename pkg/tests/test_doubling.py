"""Doubling baseline against the scan oracle."""

from hypothesis import given, settings
from hypothesis import strategies as st

from findlarger import DoublingFL
from findlarger.oracle import enumerate_sequences, naive_fl

from conftest import full_grid, one_diff_lists


def test_frozen_staircase_table():
    d = DoublingFL([0, 1, 2, 3])
    assert d.levels == 2
    assert d.table[0, :4].tolist() == [1, 2, 3, 4]
    assert d.table[1, :4].tolist() == [2, 3, 4, 4]
    assert d.query(0, 3) == 3
    assert d.query(1, 3) == 3
    assert d.query(0, 4) == 4


def test_constant_sequence_has_one_level():
    d = DoublingFL([2, 2, 2])
    assert d.levels == 1
    assert d.query(0, 2) == 0
    assert d.query(1, 3) == 3
    assert d.query(-4, 2) == 0


def test_bottom_is_absorbing():
    d = DoublingFL([0, 1, 0, 1])
    assert d.query(2, 2) == 4
    assert d.query(9, 0) == 4


def test_exhaustive_small():
    for n in range(1, 8):
        for seq in enumerate_sequences(n, 0):
            d = DoublingFL(seq)
            xs, ys = full_grid(seq.values)
            for x in xs:
                for y in ys:
                    assert d.query(x, y) == naive_fl(seq.values, x, y)


@settings(max_examples=200, deadline=None)
@given(one_diff_lists(max_n=70))
def test_random_grid(values):
    d = DoublingFL(values)
    xs, ys = full_grid(values)
    for x in xs:
        for y in ys:
            assert d.query(x, y) == naive_fl(values, x, y)


def test_entry_count_and_bytes():
    d = DoublingFL(list(range(10)))
    assert d.levels == 4  # spread 9 needs rises of 1, 2, 4, 8
    assert d.entry_count() == 4 * 11
    assert d.resident_bytes() == d.table.nbytes + 8 * 10

"""Shared strategies and small helpers for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st


@st.composite
def one_diff_lists(draw, max_n: int = 48, start: int | None = None):
    """Random 1-difference sequences as plain lists."""
    s = draw(st.integers(-8, 8)) if start is None else start
    steps = draw(st.lists(st.sampled_from((-1, 0, 1)), max_size=max_n - 1))
    values = [s]
    for step in steps:
        values.append(values[-1] + step)
    return values


def arbitrary_int_lists(max_n: int = 28):
    """Integer sequences with no adjacency constraint."""
    return st.lists(st.integers(-9, 9), min_size=1, max_size=max_n)


def full_grid(values):
    """Query grid one step beyond every boundary, matching the verifier."""
    lo, hi = min(values), max(values)
    return range(-1, len(values) + 1), range(lo - 1, hi + 2)

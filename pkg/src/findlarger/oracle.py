"""Brute-force reference implementations.

Everything here is a literal, obviously-correct transcription of the
definitions, kept independent of the fast structures so the two can be
checked against each other.  Costs are O(n) to O(n^2) per call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import DiffSequence, validate_sequence
from .trees import DepthOutOfRangeError, Tree

__all__ = [
    "OracleConfig",
    "TooLargeError",
    "DEFAULT_CONFIG",
    "naive_fl",
    "naive_fs",
    "naive_valley",
    "naive_la",
    "enumerate_sequences",
]


class TooLargeError(ValueError):
    """Raised when an exhaustive enumeration would be astronomically big."""


@dataclass(frozen=True)
class OracleConfig:
    """Size limits for the exhaustive generators."""

    max_n_exhaustive: int = 12
    value_alphabet: tuple[int, ...] = (0, 1, 2, 3)


DEFAULT_CONFIG = OracleConfig()


def naive_fl(values: Sequence[int], x: int, y: int) -> int:
    """Least i >= x with values[i] >= y by literal scan, else len(values)."""
    n = len(values)
    if x < 0:
        x = 0
    for i in range(x, n):
        if values[i] >= y:
            return i
    return n


def naive_fs(values: Sequence[int], x: int, d: int) -> int:
    """Least i >= x with values[i] <= d by literal scan, else len(values)."""
    n = len(values)
    if x < 0:
        x = 0
    for i in range(x, n):
        if values[i] <= d:
            return i
    return n


def naive_valley(values: Sequence[int], x: int, y: int) -> int:
    """Valley of the point (x, y) by enumerating reachable positions.

    A position xb <= x is reachable from (x, y) when every value strictly
    between them stays below y and values[xb] <= y (heights between
    values[xb] and y are then all reachable at xb, so the lowest point at
    xb is values[xb]).  The valley is the largest xb in 0..x whose value
    equals the minimum over all reachable positions.

    Requires 0 <= x < len(values) and y >= values[x].
    """
    assert 0 <= x < len(values) and y >= values[x]
    reachable = []
    for xb in range(x + 1):
        if values[xb] > y:
            continue
        if all(values[i] < y for i in range(xb, x)):
            reachable.append(xb)
    floor = min(values[xb] for xb in reachable)
    return max(xb for xb in range(x + 1) if values[xb] == floor)


def naive_la(tree: Tree, v: int, d: int) -> int:
    """Ancestor of v at depth d by walking parent links."""
    depth = 0
    u = v
    while tree.parent[u] != -1:
        u = tree.parent[u]
        depth += 1
    if d < 0 or d > depth:
        raise DepthOutOfRangeError(f"node {v} has depth {depth}, requested {d}")
    u = v
    for _ in range(depth - d):
        u = tree.parent[u]
    return u


def enumerate_sequences(
    n: int, start: int = 0, config: OracleConfig = DEFAULT_CONFIG
) -> Iterator[DiffSequence]:
    """Yield all 3^(n-1) 1-difference sequences of length n starting at start.

    Raises:
        TooLargeError: n exceeds config.max_n_exhaustive.
        ValueError: n < 1.
    """
    if n < 1:
        raise ValueError(f"sequence length must be at least 1, got {n}")
    if n > config.max_n_exhaustive:
        raise TooLargeError(
            f"n={n} would enumerate 3^{n - 1} sequences; limit is {config.max_n_exhaustive}"
        )
    for steps in itertools.product((-1, 0, 1), repeat=n - 1):
        values = [start]
        v = start
        for s in steps:
            v += s
            values.append(v)
        yield validate_sequence(values)

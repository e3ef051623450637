"""Doubling baseline: Theta(n log s) space, O(log s) query.

Classic comparison structure for the same find-larger problem.  Level k
of the table stores, for every position x, the first position to the
right where the value has risen by 2^k.  A query climbs greedily: from a
gap of t it takes the 2^(floor log2 t) level, which by the 1-difference
property lands exactly 2^k higher, never overshooting.
"""

from __future__ import annotations

from array import array
from typing import Iterable

import numpy as np

from .core import DiffSequence, validate_sequence

__all__ = ["DoublingFL"]


class DoublingFL:
    """Find-larger index with one table row per power-of-two rise."""

    __slots__ = ("seq", "n", "levels", "y_min", "y_max", "bottom", "table", "_values")

    def __init__(self, values: Iterable[int] | DiffSequence):
        seq = values if isinstance(values, DiffSequence) else validate_sequence(values)
        data = seq.values
        n = len(data)
        vals = np.frombuffer(data, dtype=np.int64)
        y_min = int(vals.min())
        y_max = int(vals.max())
        spread = y_max - y_min
        # levels cover every gap t in 1..spread: floor(log2 t) <= levels - 1
        levels = max(spread.bit_length(), 1)

        # level 0 by a right-to-left sweep over "next position at value v"
        size = spread + 2
        next_at = array("q", [n]) * size
        off = -y_min
        row0 = array("q", bytes(8 * n))
        for x in range(n - 1, -1, -1):
            i = data[x] + off
            next_at[i] = x
            row0[x] = next_at[i + 1]
        table = np.empty((levels, n + 1), dtype=np.int64)
        table[0, :n] = np.frombuffer(row0, dtype=np.int64)
        table[:, n] = n  # bottom is absorbing
        for k in range(1, levels):
            # rising 2^k = rising 2^(k-1) twice; exact landing makes this compose
            prev = table[k - 1, :n]
            table[k, :n] = table[k - 1][prev]

        self.seq = seq
        self._values = data
        self.n = n
        self.levels = levels
        self.y_min = y_min
        self.y_max = y_max
        self.bottom = n
        self.table = table

    def query(self, x: int, y: int) -> int:
        """Least i >= x with values[i] >= y, or n.  O(log(y - values[x]))."""
        n = self.n
        if x >= n or y > self.y_max:
            return n
        if x < 0:
            x = 0
        values = self._values
        table = self.table
        cur = x
        t = y - values[cur]
        if __debug__:
            hops = 0
        while t > 0:
            cur = int(table[t.bit_length() - 1, cur])
            if cur == n:
                return n
            t = y - values[cur]
            if __debug__:
                hops += 1
                assert hops <= self.levels, "query exceeded its hop budget"
        return cur

    def entry_count(self) -> int:
        """Stored table entries: levels * (n + 1)."""
        return self.table.size

    def resident_bytes(self) -> int:
        return self.table.nbytes + 8 * self.n

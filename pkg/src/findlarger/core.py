"""Constant-time find-larger queries on 1-difference integer sequences.

A sequence is *1-difference* when adjacent values differ by at most one.
For such a sequence the structure built here answers

    query(x, y) = min { i >= x : values[i] >= y }

in O(1) time after an O(n) build, using O(n) machine words.  Positions
with no answer are reported as ``n`` (also exposed as ``bottom``).
Find-smaller queries are the mirror image and are served by building the
structure over the negated sequence, see :func:`fs_query`.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "EmptySequenceError",
    "NotOneDifferenceError",
    "InvalidKappaError",
    "DiffSequence",
    "BuildStats",
    "SpaceReport",
    "OneLevelFL",
    "validate_sequence",
    "compute_valleys",
    "floor_pow2",
    "largest_pow2_dividing",
    "fs_query",
]


class EmptySequenceError(ValueError):
    """Raised when an operation needs at least one sequence element."""


class NotOneDifferenceError(ValueError):
    """Raised when two adjacent values differ by more than one."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(
            message or f"adjacent values at positions {index - 1} and {index} differ by more than one"
        )


class InvalidKappaError(ValueError):
    """Raised when the ladder parameter kappa is below 3."""


@dataclass(frozen=True)
class DiffSequence:
    """A validated 1-difference sequence held as a signed 64-bit array."""

    values: array

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def validate_sequence(values: Iterable[int]) -> DiffSequence:
    """Check the 1-difference property and wrap the values.

    Raises:
        EmptySequenceError: no elements.
        NotOneDifferenceError: some adjacent pair differs by more than one.
        OverflowError: a value does not fit in a signed 64-bit word.
    """
    data = values.values if isinstance(values, DiffSequence) else array("q", values)
    if not data:
        raise EmptySequenceError("sequence must contain at least one value")
    prev = data[0]
    for i in range(1, len(data)):
        cur = data[i]
        if cur - prev > 1 or prev - cur > 1:
            raise NotOneDifferenceError(i)
        prev = cur
    return DiffSequence(data)


def floor_pow2(x: int) -> int:
    """Largest power of two that is <= x.  Requires x >= 1."""
    assert x > 0, "floor_pow2 is undefined for x <= 0"
    return 1 << (x.bit_length() - 1)


def largest_pow2_dividing(x: int) -> int:
    """Largest power of two that divides x.  Requires x >= 1."""
    assert x > 0, "largest_pow2_dividing is undefined for x <= 0"
    return x & -x


def _sweep_valleys(values: Sequence[int], n: int) -> tuple[array, int, int]:
    """One left-to-right pass computing the valley of every point (x, values[x]).

    The valley of (x, y) is the rightmost among the lowest points reachable
    from (x, y) by walking left while strictly below y.  The stack holds
    one frame per still-open valley as (position, low, high): `low` is the
    valley's floor and `high` the lowest ceiling seen since, so lows rise
    and highs fall towards the top of the stack.

    Returns (valley, pushes, pops) where valley has n + 1 entries and
    valley[n] = n - 1 by convention.  Works for arbitrary integers, not
    just 1-difference sequences.
    """
    # slot 0 is a sentinel frame that is never popped
    fx = [0] * (n + 1)
    flow = [float("-inf")] * (n + 1)
    fhigh = [float("inf")] * (n + 1)
    valley = array("q", bytes(8 * (n + 1)))
    top = 0
    pushes = 0
    pops = 0
    for x in range(n):
        yx = values[x]
        t = top
        while flow[t] >= yx:  # valleys at least as low as yx: (x, yx) supersedes them
            t -= 1
        pops += top - t
        if fhigh[t] >= yx:
            # walled off from the surviving valley: x bottoms out at itself
            valley[x] = x
            if fhigh[t] > yx:  # strictly below the wall, so x opens a valley
                t += 1
                fx[t] = x
                flow[t] = yx
                fhigh[t] = yx
                pushes += 1
                if __debug__:
                    assert flow[t] > flow[t - 1] and fhigh[t] < fhigh[t - 1]
        else:
            # can descend past the wall; find the deepest valley still visible
            t0 = t
            while fhigh[t - 1] < yx:
                t -= 1
            pops += t0 - t
            valley[x] = fx[t]
            if fhigh[t - 1] > yx:
                fhigh[t] = yx  # later points must clear (x, yx) to see deeper
                if __debug__:
                    assert fhigh[t] < fhigh[t - 1] and flow[t] > flow[t - 1]
            else:
                t -= 1  # ceiling matches the next valley's: top frame is absorbed
                pops += 1
        top = t
    valley[n] = n - 1
    return valley, pushes, pops


def compute_valleys(values: Sequence[int]) -> array:
    """Valley index for every position, plus the closing entry.

    Returns an ``array('q')`` of length ``len(values) + 1`` where entry x
    is the valley of (x, values[x]) and the final entry is n - 1.  Accepts
    any integer sequence and runs in O(n).

    Raises:
        EmptySequenceError: no elements.
    """
    n = len(values)
    if n == 0:
        raise EmptySequenceError("cannot compute valleys of an empty sequence")
    valley, _, _ = _sweep_valleys(values, n)
    return valley


@dataclass(frozen=True)
class BuildStats:
    """Operation counters recorded during a build.

    Every counter is bounded by n (copies by the ladder-size bound), which
    is what makes the build linear.
    """

    stack_pushes: int
    stack_pops: int
    next_writes: int
    ladder_copies: int


@dataclass(frozen=True)
class SpaceReport:
    """Exact entry counts for one built structure.

    ``interior_ladder_entries`` excludes the two endpoint ladders, which
    are allowed to reach full height; the remaining ladders obey
    ``interior_ladder_entries <= (kappa - 1 + kappa_prime) * n``.
    ``words`` counts every stored 64-bit word including the input copy.
    """

    n: int
    kappa: int
    kappa_prime: int
    jump_entries: int
    total_ladder_entries: int
    interior_ladder_entries: int
    interior_bound: int
    words: int


class OneLevelFL:
    """Find-larger index over a 1-difference sequence.

    The constructor runs the whole O(n) build: a valley sweep, per-valley
    weights, ladders of partial find-larger answers copied off a
    right-to-left "next position at height" sweep, and a jump table that
    sends any query too tall for its own ladder to a ladder tall enough
    to hold it.  ``query`` then answers in O(1).

    The structure is immutable after construction and safe to share
    between threads.

    Args:
        values: the sequence, either raw integers or an already validated
            :class:`DiffSequence`.
        kappa: ladder tuning parameter, at least 3.  Interior ladder
            entries stay within (kappa - 1 + kappa_prime) * n, which is
            minimised (8n) at kappa in {4, 5}.

    Raises:
        InvalidKappaError: kappa < 3.
        EmptySequenceError / NotOneDifferenceError: bad input sequence.
    """

    __slots__ = (
        "seq",
        "n",
        "kappa",
        "kappa_prime",
        "y_min",
        "y_max",
        "bottom",
        "jump",
        "ladder_start",
        "ladder_height",
        "ladder_data",
        "build_stats",
        "_values",
    )

    def __init__(self, values: Iterable[int] | DiffSequence, kappa: int = 5):
        if kappa < 3:
            raise InvalidKappaError(f"kappa must be at least 3, got {kappa}")
        seq = values if isinstance(values, DiffSequence) else validate_sequence(values)
        data = seq.values
        n = len(data)

        valley, pushes, pops = _sweep_valleys(data, n)
        weight = array("q", bytes(8 * n))
        for x in range(n):
            weight[valley[x]] += 1

        y_min = min(data)
        y_max = max(data)
        # kappa_prime = ceil((2*kappa + 2) / (kappa - 2))
        kappa_prime = -((2 * kappa + 2) // (2 - kappa))

        # ladder heights: endpoints reach the top, interior ladders grow
        # with the weight of their valley but never past the top
        heights = array("q", bytes(8 * n))
        km1 = kappa - 1
        heights[0] = y_max - data[0]
        if n > 1:
            heights[n - 1] = y_max - data[n - 1]
        for x in range(1, n - 1):
            h = kappa_prime * (weight[x] - 1) - 2
            if h < km1:
                h = km1
            cap = y_max - data[x]
            heights[x] = h if h < cap else cap

        starts = array("q", bytes(8 * n))
        total = 0
        for x in range(n):
            starts[x] = total
            total += heights[x]
        ladder_data = array("q", bytes(8 * total))
        jump = array("q", bytes(8 * n))

        # next_at[v - y_min] = least position >= current x whose value is v;
        # one extra slot keeps y_max + 1 addressable (always n)
        size = y_max - y_min + 2
        next_at = array("q", [n]) * size
        off = -y_min
        step = kappa - 2
        copies = 0
        for x in range(n - 1, -1, -1):
            i = data[x] + off
            next_at[i] = x
            h = heights[x]
            if h:
                st = starts[x]
                ladder_data[st : st + h] = next_at[i + 1 : i + 1 + h]
                copies += h
            if x:
                t = i + step * (x & -x)
                if t >= size:
                    t = size - 1
                jump[x] = valley[next_at[t]]

        self.seq = seq
        self._values = data
        self.n = n
        self.kappa = kappa
        self.kappa_prime = kappa_prime
        self.y_min = y_min
        self.y_max = y_max
        self.bottom = n
        self.jump = jump
        self.ladder_start = starts
        self.ladder_height = heights
        self.ladder_data = ladder_data
        self.build_stats = BuildStats(pushes, pops, n, copies)

    def query(self, x: int, y: int) -> int:
        """Least position i >= x with values[i] >= y, or ``bottom`` (= n).

        Total over all integer arguments: x may lie outside [0, n) and y
        outside the value range.  O(1).
        """
        n = self.n
        if x >= n or y > self.y_max:
            return n
        if x < 0:
            x = 0
        values = self._values
        yx = values[x]
        t = y - yx
        if t <= 0:
            return x
        if t < self.kappa:
            # own ladder is tall enough: heights are at least
            # min(kappa - 1, y_max - values[x]) everywhere
            if __debug__:
                assert t <= self.ladder_height[x]
            return self.ladder_data[self.ladder_start[x] + t - 1]
        # align x down to a multiple of p = floor_pow2(t // kappa), avoiding
        # positions whose power-of-two weight exceeds p
        p = t // self.kappa
        p = 1 << (p.bit_length() - 1)
        xh = x - x % p
        if xh > 0 and xh % (p + p) == 0:
            xh -= p
        base = self.jump[xh]
        yb = values[base]
        if __debug__:
            assert yb < y <= yb + self.ladder_height[base]
        return self.ladder_data[self.ladder_start[base] + (y - yb - 1)]

    def find_larger(self, x: int, y: int) -> int | None:
        """Like :meth:`query` but returns None when no position qualifies."""
        i = self.query(x, y)
        return None if i == self.n else i

    def space_report(self) -> SpaceReport:
        """Exact entry counts against the linear-space bound."""
        n = self.n
        heights = self.ladder_height
        total = len(self.ladder_data)
        interior = total - heights[0] - (heights[n - 1] if n > 1 else 0)
        # values + jump + ladder_start + ladder_height + ladder data
        words = 4 * n + total
        return SpaceReport(
            n=n,
            kappa=self.kappa,
            kappa_prime=self.kappa_prime,
            jump_entries=n,
            total_ladder_entries=total,
            interior_ladder_entries=interior,
            interior_bound=(self.kappa - 1 + self.kappa_prime) * n,
            words=words,
        )

    def resident_bytes(self) -> int:
        """Bytes held by the stored arrays (8 per 64-bit word)."""
        return 8 * self.space_report().words


def fs_query(structure: OneLevelFL, x: int, d: int) -> int:
    """Find-smaller through a structure built over the negated sequence.

    If ``structure`` was built from [-v for v in values], this returns
    min { i >= x : values[i] <= d }, with ``structure.bottom`` for none.
    """
    return structure.query(x, -d)

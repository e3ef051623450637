"""Microbenchmark drivers producing one CSV row per structure.

Build time is a single wall-clock measurement; query time is measured
over seeded nontrivial queries (y above the starting value) in batches,
with the mean over all queries and the p99 taken over per-batch means.
All structures in one run answer the identical query stream, and their
answers on a prefix of it are cross-checked.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import DiffSequence, OneLevelFL, validate_sequence
from .doubling import DoublingFL

__all__ = [
    "CSV_HEADER",
    "STRUCTURE_NAMES",
    "BenchRecord",
    "ScanFL",
    "make_queries",
    "build_structure",
    "run_bench",
]

CSV_HEADER = "structure_name,n,kappa,build_ns,mean_query_ns,p99_query_ns,entries,bytes,seed"

STRUCTURE_NAMES = ("onelevel", "doubling", "naive")


@dataclass(frozen=True)
class BenchRecord:
    structure_name: str
    n: int
    kappa: int
    build_ns: int
    mean_query_ns: float
    p99_query_ns: float
    entries: int
    bytes: int
    seed: int

    def csv_row(self) -> str:
        return (
            f"{self.structure_name},{self.n},{self.kappa},{self.build_ns},"
            f"{self.mean_query_ns:.1f},{self.p99_query_ns:.1f},"
            f"{self.entries},{self.bytes},{self.seed}"
        )


class ScanFL:
    """No preprocessing, O(n) per query: the honest lower bar.

    The scan is vectorised so that cross-checks against the other
    structures stay feasible at large n.
    """

    __slots__ = ("n", "y_max", "bottom", "_vals")

    def __init__(self, values: Iterable[int] | DiffSequence):
        seq = values if isinstance(values, DiffSequence) else validate_sequence(values)
        self._vals = np.frombuffer(seq.values, dtype=np.int64)
        self.n = len(self._vals)
        self.y_max = int(self._vals.max())
        self.bottom = self.n

    def query(self, x: int, y: int) -> int:
        n = self.n
        if x >= n or y > self.y_max:
            return n
        if x < 0:
            x = 0
        tail = self._vals[x:] >= y
        i = int(np.argmax(tail))
        return x + i if tail[i] else n

    def entry_count(self) -> int:
        return self.n

    def resident_bytes(self) -> int:
        return self._vals.nbytes


def make_queries(
    values: Sequence[int], count: int, seed: int = 0
) -> tuple[list[int], list[int]]:
    """Seeded nontrivial queries: x with room above it, y in (values[x], y_max]."""
    rng = random.Random(seed)
    y_max = max(values)
    pool = [x for x in range(len(values)) if values[x] < y_max]
    if not pool:  # constant sequence: every query is trivial anyway
        pool = list(range(len(values)))
    xs = [0] * count
    ys = [0] * count
    for i in range(count):
        x = pool[rng.randrange(len(pool))]
        lo = values[x]
        xs[i] = x
        ys[i] = rng.randint(lo + 1, y_max) if lo < y_max else lo
    return xs, ys


def build_structure(name: str, seq: DiffSequence, kappa: int):
    if name == "onelevel":
        return OneLevelFL(seq, kappa)
    if name == "doubling":
        return DoublingFL(seq)
    if name == "naive":
        return ScanFL(seq)
    raise ValueError(f"unknown structure {name!r}; pick from {', '.join(STRUCTURE_NAMES)}")


def _entries_and_bytes(structure) -> tuple[int, int]:
    if isinstance(structure, OneLevelFL):
        return structure.space_report().words, structure.resident_bytes()
    return structure.entry_count(), structure.resident_bytes()


def _time_queries(structure, xs, ys, batch: int) -> tuple[float, float]:
    query = structure.query
    means = []
    total_ns = 0
    for s in range(0, len(xs), batch):
        bx = xs[s : s + batch]
        by = ys[s : s + batch]
        t0 = time.perf_counter_ns()
        for x, y in zip(bx, by):
            query(x, y)
        dt = time.perf_counter_ns() - t0
        total_ns += dt
        means.append(dt / len(bx))
    means.sort()
    p99 = means[max(0, math.ceil(0.99 * len(means)) - 1)]
    return total_ns / len(xs), p99


def run_bench(
    values: Iterable[int] | DiffSequence,
    structures: Sequence[str] = ("onelevel", "doubling"),
    kappa: int = 5,
    queries: int = 100_000,
    seed: int = 0,
    batch: int = 10_000,
    agreement_count: int = 1_000,
) -> tuple[list[BenchRecord], list[dict]]:
    """Benchmark each named structure on one shared query stream.

    Returns the records plus any answer disagreements on the first
    ``agreement_count`` queries (empty list = all structures agree).
    """
    seq = values if isinstance(values, DiffSequence) else validate_sequence(values)
    xs, ys = make_queries(seq.values, queries, seed)
    k = min(agreement_count, queries)
    records = []
    reference: list[int] | None = None
    ref_name = ""
    mismatches: list[dict] = []
    for name in structures:
        t0 = time.perf_counter_ns()
        structure = build_structure(name, seq, kappa)
        build_ns = time.perf_counter_ns() - t0
        # untimed warmup, then the timed batches
        for x, y in zip(xs[:1000], ys[:1000]):
            structure.query(x, y)
        mean_ns, p99_ns = _time_queries(structure, xs, ys, batch)
        entries, nbytes = _entries_and_bytes(structure)
        records.append(
            BenchRecord(
                structure_name=name,
                n=len(seq),
                kappa=kappa,
                build_ns=build_ns,
                mean_query_ns=mean_ns,
                p99_query_ns=p99_ns,
                entries=entries,
                bytes=nbytes,
                seed=seed,
            )
        )
        answers = [structure.query(x, y) for x, y in zip(xs[:k], ys[:k])]
        if reference is None:
            reference, ref_name = answers, name
        else:
            for i, (a, b) in enumerate(zip(reference, answers)):
                if a != b and len(mismatches) < 10:
                    mismatches.append(
                        {
                            "x": xs[i],
                            "y": ys[i],
                            ref_name: a,
                            name: b,
                            "kappa": kappa,
                            "n": len(seq),
                        }
                    )
        del structure
    return records, mismatches

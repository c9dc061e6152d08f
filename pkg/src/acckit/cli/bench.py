"""Instrumented benchmark cells with exact comparison/move counters.

Each row reports, for one (suite, op, n) cell, the largest comparison and
move counts seen in any single repetition, plus total wall-clock nanoseconds
over all repetitions. Only ``nanos`` varies between runs with the same seed.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import astuple, dataclass
from typing import Callable, Iterable, List, Sequence

from ..algorithms import OpCounter, binary_search, linear_search, sort_descending, sorted_insert
from ..containers import BoundedQueue, BoundedStack, LinkedList, ShiftArray

CSV_HEADER = "suite,op,n,reps,comparisons,moves,nanos"
SUITES = ("search", "sort", "containers")


@dataclass
class BenchRow:
    suite: str
    op: str
    n: int
    reps: int
    comparisons: int
    moves: int
    nanos: int


def _cell(suite: str, op: str, n: int, reps: int, body: Callable[[int, OpCounter], None]) -> BenchRow:
    worst = OpCounter()
    nanos = 0
    for rep in range(reps):
        c = OpCounter()
        t0 = time.perf_counter_ns()
        body(rep, c)
        nanos += time.perf_counter_ns() - t0
        worst.comparisons = max(worst.comparisons, c.comparisons)
        worst.moves = max(worst.moves, c.moves)
    return BenchRow(suite, op, n, reps, worst.comparisons, worst.moves, nanos)


def _search_rows(n: int, reps: int, rng: random.Random) -> List[BenchRow]:
    data = sorted(rng.randrange(0, 4 * n) for _ in range(n))
    lo, hi = data[0] - 5, data[-1] + 5
    # the first query misses above the maximum: the linear worst case
    targets = [hi] + [rng.randint(lo, hi) for _ in range(reps - 1)]

    def binary(rep, c):
        binary_search(data, targets[rep], c)

    def linear(rep, c):
        linear_search(data, targets[rep], c, first_only=True)

    return [_cell("search", "binary", n, reps, binary), _cell("search", "linear", n, reps, linear)]


def _sort_rows(n: int, reps: int, rng: random.Random) -> List[BenchRow]:
    inputs = [[rng.randrange(0, 1000) for _ in range(n)] for _ in range(reps)]
    outputs = {}

    def strategy(name):
        def body(rep, c):
            outputs.setdefault(name, []).append(sort_descending(inputs[rep], name, c))
        return body

    def insert_build(rep, c):
        arr = ShiftArray(n)
        for v in inputs[rep]:
            sorted_insert(arr, v, c)
        outputs.setdefault("sorted_insert", []).append(arr.values())

    rows = [
        _cell("sort", "extract_max", n, reps, strategy("extract_max")),
        _cell("sort", "in_place", n, reps, strategy("in_place")),
        _cell("sort", "sorted_insert", n, reps, insert_build),
    ]
    if not (outputs["extract_max"] == outputs["in_place"] == outputs["sorted_insert"]):
        raise AssertionError("sort strategies disagree for n=%d" % n)
    return rows


def _container_rows(n: int, reps: int, rng: random.Random) -> List[BenchRow]:
    positions = [[rng.randint(0, i) for i in range(n)] for _ in range(reps)]

    def queue(rep, c):
        q = BoundedQueue(n)
        for v in range(n):
            q.enqueue(v)
            c.moves += 1
        for _ in range(n):
            q.dequeue(counter=c)

    def stack(rep, c):
        s = BoundedStack(n)
        for v in range(n):
            s.push(v)
            c.moves += 1
        for _ in range(n):
            s.pop()

    def linked(rep, c):
        lst = LinkedList()
        for v, i in enumerate(positions[rep]):
            lst.insert(i, v, c)
            c.moves += 1

    return [
        _cell("containers", "queue_fill_drain", n, reps, queue),
        _cell("containers", "stack_fill_drain", n, reps, stack),
        _cell("containers", "list_random_insert", n, reps, linked),
    ]


_SUITE_FUNCS = {"search": _search_rows, "sort": _sort_rows, "containers": _container_rows}


def run_bench(suite: str, sizes: Sequence[int], reps: int, seed: int = 1) -> List[BenchRow]:
    if suite not in _SUITE_FUNCS:
        raise ValueError("unknown suite %r; choose from %s" % (suite, ", ".join(SUITES)))
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if reps <= 0:
        raise ValueError("reps must be positive")
    rows = []
    for n in sizes:
        if n < 1:
            raise ValueError("sizes must be positive")
        # each cell gets its own stream so cells are independent of each other
        rng = random.Random("%d/%s/%d" % (seed, suite, n))
        rows.extend(_SUITE_FUNCS[suite](n, reps, rng))
    rows.sort(key=lambda r: (r.suite, r.op, r.n))
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    w = csv.writer(out, lineterminator="\n")
    for r in rows:
        w.writerow(astuple(r))
    return out.getvalue()

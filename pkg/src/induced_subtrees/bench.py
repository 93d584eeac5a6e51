"""Timing harness for the per-solution cost on random k-degenerate graphs."""

from __future__ import annotations

import gc
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional

from .degeneracy import build_ordered_graph, compute_degeneracy_ordering
from .enumerator import EnumerationOptions, enumerate_subtrees
from .graph import random_k_degenerate

CSV_COLUMNS = ("n", "m", "k", "N", "iterations", "elapsed_ns", "ns_per_solution", "preprocess_ns", "max_undo_entries", "truncated")

DEFAULT_MAX_SOLUTIONS = 10**6


@dataclass
class RunReport:
    n: int
    m: int
    k: int
    N: int
    iterations: int
    elapsed_ns: int
    ns_per_solution: float
    # degeneracy ordering + relabelling + linked-structure setup
    preprocess_ns: int
    max_undo_entries: int
    truncated: bool

    def csv_row(self) -> str:
        row = asdict(self)
        row["ns_per_solution"] = f"{self.ns_per_solution:.1f}"
        row["truncated"] = int(self.truncated)
        return ",".join(str(row[c]) for c in CSV_COLUMNS)


def bench_one(n: int, k: int, seed: int, repeats: int = 1, max_solutions: Optional[int] = DEFAULT_MAX_SOLUTIONS) -> RunReport:
    """Best-of-``repeats`` timings for one generated graph, count mode."""
    g = random_k_degenerate(n, k, seed)
    best_pre = best_run = None
    stats = None
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter_ns()
            ordering = compute_degeneracy_ordering(g)
            og = build_ordered_graph(g, ordering)
            pre = time.perf_counter_ns() - t0
            stats = enumerate_subtrees(og, None, EnumerationOptions(max_solutions=max_solutions))
            pre += stats.setup_ns
            best_pre = pre if best_pre is None else min(best_pre, pre)
            best_run = stats.elapsed_ns if best_run is None else min(best_run, stats.elapsed_ns)
    finally:
        if gc_was_enabled:
            gc.enable()
    return RunReport(
        n=g.n,
        m=g.m,
        k=ordering.k,
        N=stats.N,
        iterations=stats.iterations,
        elapsed_ns=best_run,
        ns_per_solution=best_run / max(stats.N, 1),
        preprocess_ns=best_pre,
        max_undo_entries=stats.max_undo_entries,
        truncated=stats.truncated,
    )


def run_bench(sizes: Iterable[int], k: int, seed: int, repeats: int = 1, max_solutions: Optional[int] = DEFAULT_MAX_SOLUTIONS) -> List[RunReport]:
    return [bench_one(n, k, seed, repeats, max_solutions) for n in sizes]

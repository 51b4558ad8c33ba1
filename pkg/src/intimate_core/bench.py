"""Query workloads and the benchmark protocols.

Three protocols mirror the experiments they stand in for:

``vary-k``      k in {2, 4, 6, 8} at a fixed query size
``vary-q``      |Q| in {1, ..., 7} at a fixed k
``iterations``  k = 6, |Q| = 5, keeping the per-iteration size/weight series

Every strategy runs on the identical workload. Result rows are written
to a CSV that is fully determined by the graph, the seed and the
parameters; wall-clock timings go to a sidecar CSV so the main file stays
reproducible byte for byte.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .core import CoreIndex
from .graph import WeightedGraph
from .refine import RefineConfig
from .search import STRATEGIES, QuerySpec, search

__all__ = [
    "PROTOCOLS",
    "Workload",
    "BenchRecord",
    "generate_workload",
    "protocol_workload",
    "run_workload",
    "run_bench",
    "write_bench_csv",
    "median_by",
]

PROTOCOLS = ("vary-k", "vary-q", "iterations")
CSV_VERSION = "intimate-core-bench v1"
RESULT_COLUMNS = (
    "query_id", "strategy", "k", "q_size", "query", "feasible", "reason", "weight",
    "iterations", "l_max", "initial_size", "final_size", "sizes", "weights",
)
TIMING_COLUMNS = ("query_id", "strategy", "tree_ms", "expand_ms", "refine_ms", "total_ms")

VARY_K = (2, 4, 6, 8)
VARY_Q = (1, 2, 3, 4, 5, 6, 7)
DEFAULT_Q_SIZE = 3
DEFAULT_K = 4


@dataclass
class Workload:
    queries: list[tuple[tuple[int, ...], int]]
    seed: int
    params: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.queries)


def generate_workload(idx: CoreIndex, ks, q_sizes, n_queries: int, seed: int) -> Workload:
    """``n_queries`` random query sets for every ``(k, |Q|)`` combination.

    Query nodes are drawn without replacement from nodes of coreness >= k;
    when fewer than ``|Q|`` such nodes exist the draw falls back to all
    nodes and the resulting queries simply come out infeasible.
    """
    rng = np.random.default_rng(seed)
    everyone = np.arange(len(idx))
    coreness = np.asarray(idx.coreness)
    queries = []
    for k in ks:
        pool = np.flatnonzero(coreness >= k)
        for size in q_sizes:
            src = pool if pool.size >= size else everyone
            for _ in range(n_queries):
                Q = tuple(int(v) for v in rng.choice(src, size=size, replace=False))
                queries.append((Q, k))
    return Workload(queries, seed, {"ks": list(ks), "q_sizes": list(q_sizes), "n_queries": n_queries})


def protocol_workload(idx: CoreIndex, protocol: str, seed: int, n_queries: int = 100,
                      k: int | None = None, q_size: int | None = None) -> Workload:
    if protocol == "vary-k":
        return generate_workload(idx, VARY_K, [q_size or DEFAULT_Q_SIZE], n_queries, seed)
    if protocol == "vary-q":
        return generate_workload(idx, [k or DEFAULT_K], VARY_Q, n_queries, seed)
    if protocol == "iterations":
        return generate_workload(idx, [k or 6], [q_size or 5], n_queries, seed)
    raise ValueError(f"unknown protocol {protocol!r}; choose from {PROTOCOLS}")


@dataclass
class BenchRecord:
    query_id: int
    strategy: str
    k: int
    query: tuple[int, ...]
    feasible: bool
    reason: str
    weight: float | None
    iterations: int
    l_max: int
    sizes: list[int]
    weights: list[float]
    tree_ms: float
    expand_ms: float
    refine_ms: float

    @property
    def q_size(self) -> int:
        return len(self.query)

    @property
    def initial_size(self) -> int:
        return self.sizes[0] if self.sizes else 0

    @property
    def final_size(self) -> int:
        return self.sizes[-1] if self.sizes else 0

    @property
    def total_ms(self) -> float:
        return self.tree_ms + self.expand_ms + self.refine_ms


def run_workload(g: WeightedGraph, idx: CoreIndex, workload: Workload, strategies=STRATEGIES,
                 refine_cfg: RefineConfig | None = None) -> list[BenchRecord]:
    cfg = refine_cfg or RefineConfig()
    records = []
    for qid, (Q, k) in enumerate(workload.queries):
        for strategy in strategies:
            res = search(g, idx, QuerySpec(Q, k, strategy, cfg))
            st = res.stats
            records.append(BenchRecord(
                qid, strategy, k, tuple(g.label_of(q) for q in Q), res.feasible,
                res.reason or "", res.weight, st.iterations, st.l_max,
                list(st.sizes), list(st.weights), st.tree_ms, st.expand_ms, st.refine_ms,
            ))
    return records


def run_bench(g: WeightedGraph, idx: CoreIndex, protocol: str, seed: int, n_queries: int = 100,
              strategies=STRATEGIES, refine_cfg: RefineConfig | None = None, **kw) -> list[BenchRecord]:
    workload = protocol_workload(idx, protocol, seed, n_queries, **kw)
    return run_workload(g, idx, workload, strategies, refine_cfg)


def _num(x):
    return "" if x is None else repr(float(x))


def _result_row(r: BenchRecord):
    return [
        r.query_id, r.strategy, r.k, r.q_size, " ".join(map(str, r.query)),
        int(r.feasible), r.reason, _num(r.weight), r.iterations, r.l_max,
        r.initial_size, r.final_size,
        ";".join(map(str, r.sizes)), ";".join(repr(float(w)) for w in r.weights),
    ]


def format_bench_csv(records, meta: dict) -> str:
    buf = io.StringIO()
    head = " ".join(f"{k}={v}" for k, v in meta.items())
    buf.write(f"# {CSV_VERSION} {head}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RESULT_COLUMNS)
    for r in records:
        w.writerow(_result_row(r))
    return buf.getvalue()


def write_bench_csv(records, path, meta: dict, timings_path=None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_bench_csv(records, meta))
    if timings_path is not None:
        with open(timings_path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(TIMING_COLUMNS)
            for r in records:
                w.writerow([r.query_id, r.strategy, f"{r.tree_ms:.3f}", f"{r.expand_ms:.3f}",
                            f"{r.refine_ms:.3f}", f"{r.total_ms:.3f}"])


def median_by(records, key, value, feasible_only=True) -> dict:
    """Median of ``value(record)`` grouped by ``key(record)``."""
    groups: dict = {}
    for r in records:
        if feasible_only and not r.feasible:
            continue
        groups.setdefault(key(r), []).append(value(r))
    return {k: float(np.median(v)) for k, v in sorted(groups.items())}

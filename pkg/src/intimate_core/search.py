"""Query entry points: local exploration search and the global baselines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .core import CoreIndex, check_query_in_core, maximal_connected_kcore
from .errors import DepthExceeded, InfeasibleQuery
from .expansion import expand_to_kcore
from .graph import WeightedGraph
from .refine import GroupResult, RefineConfig, RunStats, refine
from .seedtree import SeedTree, build_tree_mst, build_tree_path

__all__ = ["STRATEGIES", "QuerySpec", "leks_search", "global_baseline", "search"]

LOCAL_STRATEGIES = ("tree-mst", "tree-path")
GLOBAL_STRATEGIES = ("global-icgm", "global-icgs")
STRATEGIES = LOCAL_STRATEGIES + GLOBAL_STRATEGIES


@dataclass(frozen=True)
class QuerySpec:
    """A query over internal node ids; order of ``Q`` picks the first anchor."""

    Q: tuple[int, ...]
    k: int
    strategy: str = "tree-path"
    refine: RefineConfig = field(default_factory=RefineConfig)
    max_depth: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "Q", tuple(self.Q))
        if not self.Q:
            raise ValueError("query set must be non-empty")
        if len(set(self.Q)) != len(self.Q):
            raise ValueError("query set contains duplicates")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")


def _ms(t0):
    return (time.perf_counter() - t0) * 1000.0


def _refined(candidate, spec, cfg, stats):
    t0 = time.perf_counter()
    res = refine(candidate, spec.Q, spec.k, cfg)
    stats.refine_ms = _ms(t0)
    stats.iterations = res.stats.iterations
    stats.sizes = res.stats.sizes
    stats.weights = res.stats.weights
    stats.trace = res.stats.trace
    res.stats = stats
    return res


def leks_search(g: WeightedGraph, idx: CoreIndex, spec: QuerySpec) -> GroupResult:
    """Tree generation, tree-to-graph expansion, then refinement.

    Infeasible queries come back as ``feasible=False`` with the reason set
    to the error's tag (``query-not-in-core``, ``disconnected``, ...). When
    ``spec.max_depth`` stops the expansion early, the maximal connected
    k-core is refined instead.
    """
    if spec.strategy not in LOCAL_STRATEGIES:
        raise ValueError(f"leks_search needs one of {LOCAL_STRATEGIES}")
    Q, k = list(spec.Q), spec.k
    stats = RunStats()
    try:
        t0 = time.perf_counter()
        if len(Q) == 1:
            check_query_in_core(g, idx, Q, k)
            seed = SeedTree.singleton(Q[0])
        elif spec.strategy == "tree-mst":
            seed = build_tree_mst(g, idx, Q, k)
        else:
            seed = build_tree_path(g, idx, Q, k)
        stats.tree_ms = _ms(t0) if len(Q) > 1 else 0.0

        t0 = time.perf_counter()
        try:
            candidate, xstats = expand_to_kcore(g, idx, Q, k, seed, spec.max_depth)
            stats.l_max = xstats.l_max
        except DepthExceeded:
            candidate = maximal_connected_kcore(g, idx, Q, k)
            stats.l_max = spec.max_depth
        stats.expand_ms = _ms(t0)
    except InfeasibleQuery as exc:
        return GroupResult.infeasible(exc.reason, stats)
    return _refined(candidate, spec, spec.refine, stats)


def global_baseline(g: WeightedGraph, idx: CoreIndex, spec: QuerySpec) -> GroupResult:
    """Start from the maximal connected k-core and refine it.

    ``global-icgm`` deletes in batches, ``global-icgs`` one node at a time.
    The candidate-extraction time is reported as ``expand_ms``.
    """
    if spec.strategy not in GLOBAL_STRATEGIES:
        raise ValueError(f"global_baseline needs one of {GLOBAL_STRATEGIES}")
    stats = RunStats()
    try:
        t0 = time.perf_counter()
        candidate = maximal_connected_kcore(g, idx, spec.Q, spec.k)
        stats.expand_ms = _ms(t0)
    except InfeasibleQuery as exc:
        return GroupResult.infeasible(exc.reason, stats)
    mode = "bulk" if spec.strategy == "global-icgm" else "single"
    cfg = RefineConfig(spec.refine.epsilon, mode, spec.refine.scorer, spec.refine.trace)
    return _refined(candidate, spec, cfg, stats)


def search(g: WeightedGraph, idx: CoreIndex, spec: QuerySpec) -> GroupResult:
    """Dispatch on ``spec.strategy``."""
    if spec.strategy in LOCAL_STRATEGIES:
        return leks_search(g, idx, spec)
    return global_baseline(g, idx, spec)


def make_spec(Q: Sequence[int], k: int, strategy: str = "tree-path", **refine_kw) -> QuerySpec:
    """Convenience constructor; extra keywords go to :class:`RefineConfig`."""
    max_depth = refine_kw.pop("max_depth", None)
    return QuerySpec(tuple(Q), k, strategy, RefineConfig(**refine_kw), max_depth)

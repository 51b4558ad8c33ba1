"""Tree-to-graph expansion: grow the seed level by level inside C_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import CoreIndex, connected_kcore_containing
from .errors import DepthExceeded, QuerySplit
from .graph import Subgraph, WeightedGraph

__all__ = ["ExpansionStats", "expand_to_kcore"]


@dataclass
class ExpansionStats:
    l_max: int = 0
    # |L'| after each level, level 0 included
    accumulated_sizes: list[int] = field(default_factory=list)
    candidate_size: int = 0


def expand_to_kcore(
    g: WeightedGraph,
    idx: CoreIndex,
    Q: Sequence[int],
    k: int,
    seed,
    max_depth: int | None = None,
) -> tuple[Subgraph, ExpansionStats]:
    """Expand ``seed`` breadth-first through C_k until a connected k-core holds Q.

    ``seed`` is a :class:`~intimate_core.seedtree.SeedTree` or any iterable
    of node ids. After each level the accumulated node set is peeled to a
    k-core and the component holding Q is taken; the first level where that
    succeeds ends the search (depth 0 is tried before any expansion).
    """
    Q = list(Q)
    core = idx.coreness
    seed_nodes = getattr(seed, "nodes", seed)
    level = sorted(set(seed_nodes))
    if any(core[v] < k for v in level):
        raise ValueError("seed contains nodes outside the k-core")
    if any(q not in set(level) for q in Q):
        raise ValueError("seed must contain every query node")

    adj = g._adj
    acc = set(level)
    stats = ExpansionStats()
    depth = 0
    while True:
        stats.accumulated_sizes.append(len(acc))
        found = connected_kcore_containing(g, acc, Q, k)
        if found is not None:
            stats.l_max = depth
            stats.candidate_size = len(found)
            return Subgraph(g, found), stats
        if max_depth is not None and depth >= max_depth:
            raise DepthExceeded(max_depth)
        nxt = set()
        for v in level:
            for u, _ in adj[v]:
                if core[u] >= k and u not in acc:
                    nxt.add(u)
        if not nxt:
            # acc is the whole C_k component of Q, which is itself a
            # connected k-core; landing here means the query was split.
            raise QuerySplit(f"query nodes {Q} do not share a connected {k}-core")
        acc |= nxt
        level = sorted(nxt)
        depth += 1

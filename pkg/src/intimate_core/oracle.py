"""Exact minimum-weight group by exhaustive subset enumeration (toy graphs only)."""

from __future__ import annotations

from typing import Sequence

from .errors import BudgetExceeded
from .graph import Subgraph, WeightedGraph, group_weight

__all__ = ["oracle_min_group"]

MAX_BUDGET = 16


def _connected(mask, adjmask):
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adjmask[low.bit_length() - 1]
            f ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def oracle_min_group(g: WeightedGraph, Q: Sequence[int], k: int, node_budget: int = MAX_BUDGET):
    """Smallest-weight connected k-core containing ``Q``.

    Every node subset containing Q is tested. Returns ``(weight, members)``
    or ``None``; equal weights resolve to the lexicographically smallest
    sorted member tuple.
    """
    node_budget = min(node_budget, MAX_BUDGET)
    if g.n > node_budget:
        raise BudgetExceeded(g.n, node_budget)
    Q = list(Q)
    adjmask = [0] * g.n
    for u, v, _ in g.edges():
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    qmask = 0
    for q in Q:
        g._check(q)
        qmask |= 1 << q
    others = [v for v in range(g.n) if not qmask >> v & 1]

    best = None
    for sub in range(1 << len(others)):
        mask = qmask
        for i, v in enumerate(others):
            if sub >> i & 1:
                mask |= 1 << v
        if mask.bit_count() < k + 1:
            continue
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if (adjmask[v] & mask).bit_count() < k:
                ok = False
                break
            m ^= low
        if not ok or not _connected(mask, adjmask):
            continue
        members = tuple(v for v in range(g.n) if mask >> v & 1)
        w = group_weight(Subgraph(g, members))
        if best is None or (w, members) < best:
            best = (w, members)
    if best is None:
        return None
    return best[0], frozenset(best[1])

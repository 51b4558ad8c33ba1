"""Seed trees connecting the query nodes inside the k-core.

Two strategies:

* :func:`build_tree_mst` runs one Dijkstra per query node, unions the
  query-pair shortest paths into a small weighted graph and grows a Prim
  tree over it from the first query node.
* :func:`build_tree_path` chains shortest paths greedily, always jumping
  from the current anchor to the nearest query node not yet reached.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

from .core import CoreIndex, _CoreView, check_query_in_core
from .errors import Disconnected, UnknownNode
from .graph import WeightedGraph

__all__ = [
    "ShortestPath",
    "SeedTree",
    "dijkstra_sssp",
    "build_tree_mst",
    "build_tree_path",
]


@dataclass(frozen=True)
class ShortestPath:
    source: int
    target: int
    nodes: tuple[int, ...]
    weight: float

    def edges(self):
        return list(zip(self.nodes, self.nodes[1:]))


@dataclass(frozen=True)
class SeedTree:
    nodes: frozenset
    edges: tuple[tuple[int, int, float], ...]

    @property
    def weight(self) -> float:
        return math.fsum(w for _, _, w in self.edges)

    @classmethod
    def singleton(cls, q: int) -> "SeedTree":
        return cls(frozenset([q]), ())


def dijkstra_sssp(universe, source: int, targets, g: WeightedGraph | None = None) -> dict[int, ShortestPath]:
    """Shortest paths from ``source`` to each reachable target inside ``universe``.

    ``universe`` is a :class:`Subgraph`; any object with ``__contains__``
    works if the graph is passed explicitly as ``g``. The search stops once
    every target is settled. Equal-weight relaxations prefer the smaller
    predecessor id, which makes the returned paths deterministic.
    """
    if g is None:
        g = universe.parent
    if source not in universe:
        raise UnknownNode(source)
    adj = g._adj
    pending = {t for t in targets if t in universe}
    dist = {source: 0.0}
    pred = {source: None}
    done = set()
    heap = [(0.0, source)]
    while heap and pending:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        pending.discard(u)
        for v, w in adj[u]:
            if v in done or v not in universe:
                continue
            nd = d + w
            old = dist.get(v)
            if old is None or nd < old:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == old and u < pred[v]:
                pred[v] = u

    out = {}
    for t in targets:
        if t in done:
            seq = [t]
            while pred[seq[-1]] is not None:
                seq.append(pred[seq[-1]])
            seq.reverse()
            out[t] = ShortestPath(source, t, tuple(seq), dist[t])
    return out


def _edge(u, v, w):
    return (u, v, w) if u < v else (v, u, w)


def _strip_leaves(edges, keep) -> list[tuple[int, int, float]]:
    """Repeatedly drop leaves that are not in ``keep``."""
    adj: dict[int, set[int]] = {}
    for u, v, _ in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    leaves = [v for v, nb in adj.items() if len(nb) == 1 and v not in keep]
    while leaves:
        v = leaves.pop()
        if v not in adj or len(adj[v]) != 1:
            continue
        (u,) = adj.pop(v)
        adj[u].discard(v)
        if len(adj[u]) == 1 and u not in keep:
            leaves.append(u)
    return sorted(e for e in edges if e[0] in adj and e[1] in adj and e[1] in adj[e[0]])


def _finish(Q, edges) -> SeedTree:
    edges = _strip_leaves(edges, set(Q))
    nodes = set(Q)
    for u, v, _ in edges:
        nodes.add(u)
        nodes.add(v)
    return SeedTree(frozenset(nodes), tuple(edges))


def _prepare(g, idx, Q, k):
    Q = list(Q)
    if len(Q) < 2:
        raise ValueError("seed tree construction needs at least two query nodes")
    if len(set(Q)) != len(Q):
        raise ValueError("duplicate query nodes")
    check_query_in_core(g, idx, Q, k)
    return Q, _CoreView(idx, k)


def build_tree_mst(g: WeightedGraph, idx: CoreIndex, Q: Sequence[int], k: int) -> SeedTree:
    """Spanning-tree strategy.

    Query-pair shortest paths inside C_k are merged into ``G_pw``; a Prim
    tree keyed on single-edge weight then grows from ``Q[0]`` until every
    query node is inserted, and branches without query nodes are trimmed.
    """
    Q, ck = _prepare(g, idx, Q, k)
    pw: dict[int, dict[int, float]] = {}
    for i, q in enumerate(Q[:-1]):
        rest = Q[i + 1:]
        paths = dijkstra_sssp(ck, q, rest, g)
        for t in rest:
            if t not in paths:
                raise Disconnected(q, t, k)
            for a, b in paths[t].edges():
                w = g.weight(a, b)
                pw.setdefault(a, {})[b] = w
                pw.setdefault(b, {})[a] = w

    q0 = Q[0]
    missing = set(Q)
    key = {q0: 0.0}
    parent: dict[int, int | None] = {q0: None}
    in_tree = set()
    tree_edges = []
    heap = [(0.0, q0)]
    while missing and heap:
        _, v = heapq.heappop(heap)
        if v in in_tree:
            continue
        in_tree.add(v)
        missing.discard(v)
        if parent[v] is not None:
            tree_edges.append(_edge(parent[v], v, pw[v][parent[v]]))
        for u in sorted(pw.get(v, ())):
            if u in in_tree:
                continue
            w = pw[v][u]
            if u not in key or key[u] > w:
                key[u] = w
                parent[u] = v
                heapq.heappush(heap, (w, u))
    # G_pw is connected by construction, so every query node is reached
    assert not missing
    return _finish(Q, tree_edges)


def build_tree_path(g: WeightedGraph, idx: CoreIndex, Q: Sequence[int], k: int) -> SeedTree:
    """Greedy path-chaining strategy.

    From the anchor (initially ``Q[0]``) jump to the nearest remaining
    query node, merge that shortest path, and move the anchor there. Cycles
    created by merging are broken by keeping a minimum spanning tree of the
    union, which discards the heaviest edge on each cycle.
    """
    Q, ck = _prepare(g, idx, Q, k)
    anchor = Q[0]
    remaining = list(Q[1:])
    union: set[tuple[int, int, float]] = set()
    while remaining:
        paths = dijkstra_sssp(ck, anchor, remaining, g)
        for t in remaining:
            if t not in paths:
                raise Disconnected(anchor, t, k)
        nxt = min(remaining, key=lambda t: (paths[t].weight, t))
        for a, b in paths[nxt].edges():
            union.add(_edge(a, b, g.weight(a, b)))
        remaining.remove(nxt)
        anchor = nxt
    return _finish(Q, _kruskal(union))


def _kruskal(edges) -> list[tuple[int, int, float]]:
    parent: dict[int, int] = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    kept = []
    for u, v, w in sorted(edges, key=lambda e: (e[2], e[0], e[1])):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            kept.append((u, v, w))
    return kept


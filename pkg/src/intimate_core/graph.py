"""Weighted undirected graphs, edge-list ingestion and induced subgraphs.

Nodes are stored under contiguous internal ids ``0..n-1`` assigned in
ascending order of their external (file) ids. Every algorithm in the
package works on internal ids; :meth:`WeightedGraph.node_of` and
:meth:`WeightedGraph.label_of` translate at the boundary.
"""

from __future__ import annotations

import hashlib
import logging
import math
from collections import deque
from typing import Iterable, Iterator

from .errors import ParseError, UnknownNode, WeightError

log = logging.getLogger(__name__)

__all__ = [
    "WeightedGraph",
    "Subgraph",
    "load_graph",
    "write_edge_list",
    "neighbors",
    "group_weight",
    "induced_subgraph",
    "connected_component_containing",
]


def _check_weight(w, lineno=None):
    if not (w > 0 and math.isfinite(w)):
        raise WeightError(lineno, w)


class WeightedGraph:
    """Immutable undirected simple graph with positive edge weights.

    Adjacency lists are sorted by neighbour id so every traversal is
    deterministic.
    """

    __slots__ = ("_labels", "_index", "_adj", "_wmap", "_m", "dropped_self_loops", "_hash")

    def __init__(self, labels, adjacency, dropped_self_loops=0):
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        self._adj = tuple(tuple(sorted(row)) for row in adjacency)
        self._wmap = tuple(dict(row) for row in self._adj)
        self._m = sum(len(row) for row in self._adj) // 2
        self.dropped_self_loops = dropped_self_loops
        self._hash = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int, float]], nodes: Iterable[int] = ()):
        """Build a graph from ``(u, v, w)`` triples keyed by external id.

        Duplicate pairs keep the minimum weight; self-loops are dropped and
        counted in ``dropped_self_loops``.
        """
        best: dict[tuple[int, int], float] = {}
        labels = set(nodes)
        loops = 0
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            _check_weight(w)
            labels.add(u)
            labels.add(v)
            if u == v:
                loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            old = best.get(key)
            if old is None or w < old:
                best[key] = w
        return cls._assemble(labels, best, loops)

    @classmethod
    def _assemble(cls, labels, best, loops):
        ordered = sorted(labels)
        index = {lab: i for i, lab in enumerate(ordered)}
        adj: list[list[tuple[int, float]]] = [[] for _ in ordered]
        for (a, b), w in best.items():
            i, j = index[a], index[b]
            adj[i].append((j, w))
            adj[j].append((i, w))
        return cls(ordered, adj, loops)

    # -- size and id translation ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    def nodes(self) -> range:
        return range(len(self._labels))

    def node_of(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNode(label) from None

    def label_of(self, v: int) -> int:
        self._check(v)
        return self._labels[v]

    def _check(self, v):
        if not (isinstance(v, int) and 0 <= v < len(self._labels)):
            raise UnknownNode(v)

    # -- adjacency --------------------------------------------------------------

    def neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def weight(self, u: int, v: int) -> float:
        self._check(u)
        return self._wmap[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._wmap[u]

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield each edge once as ``(u, v, w)`` with ``u < v``, in sorted order."""
        for u, row in enumerate(self._adj):
            for v, w in row:
                if u < v:
                    yield u, v, w

    @property
    def content_hash(self) -> str:
        """Digest of the canonical edge list; stable across file formatting."""
        if self._hash is None:
            h = hashlib.sha256()
            for lab in self._labels:
                h.update(b"n %d\n" % lab)
            for u, v, w in self.edges():
                h.update(b"e %d %d %s\n" % (self._labels[u], self._labels[v], w.hex().encode()))
            self._hash = h.hexdigest()[:16]
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self):
        return hash(self.content_hash)

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


class Subgraph:
    """Node subset of a parent graph with induced-edge semantics."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: WeightedGraph, members: Iterable[int]):
        self.parent = parent
        self.members = frozenset(members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other):
        if not isinstance(other, Subgraph):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgraph(|V|={len(self.members)}, |E|={sum(1 for _ in self.edges())})"

    def neighbors(self, v: int) -> list[tuple[int, float]]:
        if v not in self.members:
            raise UnknownNode(v)
        mem = self.members
        return [(u, w) for u, w in self.parent._adj[v] if u in mem]

    def degree(self, v: int) -> int:
        if v not in self.members:
            raise UnknownNode(v)
        mem = self.members
        return sum(1 for u, _ in self.parent._adj[v] if u in mem)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        adj = self.parent._adj
        mem = self.members
        for u in sorted(mem):
            for v, w in adj[u]:
                if u < v and v in mem:
                    yield u, v, w

    def weight(self) -> float:
        return group_weight(self)

    def is_empty(self) -> bool:
        return not self.members


def neighbors(g: WeightedGraph, v: int) -> list[tuple[int, float]]:
    """Neighbours of ``v`` with edge weights, sorted by neighbour id."""
    return list(g.neighbors(v))


def group_weight(h: Subgraph) -> float:
    """Sum of the induced edge weights of ``h``.

    ``math.fsum`` makes the result independent of summation order, so two
    equal member sets always report identical weights.
    """
    return math.fsum(w for _, _, w in h.edges())


def induced_subgraph(g: WeightedGraph, members: Iterable[int]) -> Subgraph:
    members = frozenset(members)
    for v in members:
        g._check(v)
    return Subgraph(g, members)


def connected_component_containing(h: Subgraph, v: int) -> Subgraph:
    """Maximal connected node set of ``h`` containing ``v`` (BFS over induced edges)."""
    if v not in h.members:
        raise UnknownNode(v)
    return Subgraph(h.parent, bfs_component(h.parent, h.members, v))


def bfs_component(g: WeightedGraph, members, source: int) -> set[int]:
    """Nodes reachable from ``source`` through edges with both ends in ``members``.

    ``members`` only needs ``__contains__``.
    """
    adj = g._adj
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if v not in seen and v in members:
                seen.add(v)
                queue.append(v)
    return seen


# -- edge-list files -------------------------------------------------------------


def parse_edge_list(lines: Iterable[str]) -> WeightedGraph:
    edges = []
    labels = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, raw.rstrip("\n"), "expected 'u v w'")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise ParseError(lineno, raw.rstrip("\n")) from None
        _check_weight(w, lineno)
        labels.add(u)
        labels.add(v)
        edges.append((u, v, w))
    g = WeightedGraph.from_edges(edges, labels)
    if g.dropped_self_loops:
        log.warning("dropped %d self-loop(s)", g.dropped_self_loops)
    return g


def load_graph(path, format: str = "edge-list") -> WeightedGraph:
    """Read a whitespace-separated ``u v w`` edge list ('#' lines are comments)."""
    if format != "edge-list":
        raise ValueError(f"unsupported graph format {format!r}")
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def _fmt_weight(w: float) -> str:
    return str(int(w)) if w.is_integer() else repr(w)


def format_edge_list(g: WeightedGraph) -> str:
    lab = g.labels
    return "".join(f"{lab[u]} {lab[v]} {_fmt_weight(w)}\n" for u, v, w in g.edges())


def write_edge_list(g: WeightedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))

"""Core decomposition, the persisted coreness index and k-core retrieval."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Disconnected, FormatError, QueryNotInCore
from .graph import Subgraph, WeightedGraph, bfs_component

__all__ = [
    "CoreIndex",
    "core_decompose",
    "save_index",
    "load_index",
    "load_or_build_index",
    "kcore_of",
    "maximal_connected_kcore",
    "peel",
    "connected_kcore_containing",
]

INDEX_MAGIC = "#coreness v1"


@dataclass(frozen=True)
class CoreIndex:
    """Coreness per internal node id.

    ``labels`` holds the external id of each internal node so the index can
    be written without the graph at hand.
    """

    coreness: tuple[int, ...]
    labels: tuple[int, ...]
    graph_hash: str = ""

    @property
    def delta_max(self) -> int:
        return max(self.coreness, default=0)

    def __len__(self):
        return len(self.coreness)

    def __getitem__(self, v: int) -> int:
        return self.coreness[v]

    def nodes_with_coreness_at_least(self, k: int) -> list[int]:
        return [v for v, c in enumerate(self.coreness) if c >= k]


def core_decompose(g: WeightedGraph) -> CoreIndex:
    """Coreness of every node by min-degree peeling.

    Bucket-queue variant of the classic peeling loop: nodes are kept in
    degree order via bin boundaries and swapped down as their degree drops,
    so the whole decomposition is O(n + m).
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    md = max(deg, default=0)
    bin_start = [0] * (md + 1)
    for d in deg:
        bin_start[d] += 1
    start = 0
    for d in range(md + 1):
        cnt = bin_start[d]
        bin_start[d] = start
        start += cnt
    pos = [0] * n
    order = [0] * n
    for v in range(n):
        pos[v] = bin_start[deg[v]]
        order[pos[v]] = v
        bin_start[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_start[d] = bin_start[d - 1]
    if n:
        bin_start[0] = 0

    adj = g._adj
    for i in range(n):
        v = order[i]
        dv = deg[v]
        for u, _ in adj[v]:
            du = deg[u]
            if du > dv:
                # move u to the front of its bin, then shrink the bin
                pu = pos[u]
                pw = bin_start[du]
                w = order[pw]
                if u != w:
                    order[pu], order[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bin_start[du] += 1
                deg[u] = du - 1
    return CoreIndex(tuple(deg), g.labels, g.content_hash)


# -- persistence -------------------------------------------------------------------


def save_index(idx: CoreIndex, path) -> None:
    """Write ``#coreness v1 <hash>`` then one ``label coreness`` line per node."""
    rows = sorted(zip(idx.labels, idx.coreness))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{INDEX_MAGIC} {idx.graph_hash}\n")
        for lab, c in rows:
            fh.write(f"{lab} {c}\n")


def load_index(path) -> CoreIndex:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if not header.startswith(INDEX_MAGIC):
            raise FormatError(f"{path}: missing '{INDEX_MAGIC}' header")
        graph_hash = header[len(INDEX_MAGIC):].strip()
        rows = []
        for lineno, line in enumerate(fh, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2:
                raise FormatError(f"{path}:{lineno}: expected 'node coreness'")
            try:
                lab, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-integer field") from None
            if c < 0:
                raise FormatError(f"{path}:{lineno}: negative coreness")
            rows.append((lab, c))
    rows.sort()
    labels = tuple(lab for lab, _ in rows)
    if len(set(labels)) != len(labels):
        raise FormatError(f"{path}: duplicate node ids")
    return CoreIndex(tuple(c for _, c in rows), labels, graph_hash)


def load_or_build_index(g: WeightedGraph, path) -> CoreIndex:
    """Load the index at ``path``, rebuilding and rewriting it if missing or stale."""
    if os.path.exists(path):
        try:
            idx = load_index(path)
        except FormatError:
            idx = None
        if idx is not None and idx.graph_hash == g.content_hash and idx.labels == g.labels:
            return idx
    idx = core_decompose(g)
    save_index(idx, path)
    return idx


# -- k-core retrieval ------------------------------------------------------------


def kcore_of(g: WeightedGraph, idx: CoreIndex, k: int) -> Subgraph:
    """The k-core of ``g`` as the induced subgraph on nodes of coreness >= k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return Subgraph(g, idx.nodes_with_coreness_at_least(k))


class _CoreView:
    """Membership test for C_k backed by the coreness array."""

    __slots__ = ("coreness", "k")

    def __init__(self, idx, k):
        self.coreness = idx.coreness
        self.k = k

    def __contains__(self, v):
        return self.coreness[v] >= self.k


def check_query_in_core(g: WeightedGraph, idx: CoreIndex, Q: Sequence[int], k: int) -> None:
    for q in Q:
        g._check(q)
        if idx.coreness[q] < k:
            raise QueryNotInCore(q, idx.coreness[q], k)


def maximal_connected_kcore(g: WeightedGraph, idx: CoreIndex, Q: Sequence[int], k: int) -> Subgraph:
    """Connected component of the k-core holding every query node.

    Raises :class:`QueryNotInCore` or :class:`Disconnected` when no such
    component exists.
    """
    Q = list(Q)
    if not Q:
        raise ValueError("query set must be non-empty")
    check_query_in_core(g, idx, Q, k)
    comp = bfs_component(g, _CoreView(idx, k), Q[0])
    for q in Q[1:]:
        if q not in comp:
            raise Disconnected(Q[0], q, k)
    return Subgraph(g, comp)


def peel(g: WeightedGraph, members: Iterable[int], k: int) -> set[int]:
    """Members left after repeatedly deleting nodes of induced degree < k."""
    alive = set(members)
    adj = g._adj
    deg = {v: sum(1 for u, _ in adj[v] if u in alive) for v in alive}
    stack = [v for v, d in deg.items() if d < k]
    removed = set(stack)
    while stack:
        v = stack.pop()
        alive.discard(v)
        for u, _ in adj[v]:
            if u in alive and u not in removed:
                deg[u] -= 1
                if deg[u] < k:
                    removed.add(u)
                    stack.append(u)
    return alive


def connected_kcore_containing(g: WeightedGraph, members: Iterable[int], Q: Sequence[int], k: int):
    """Connected k-core of the subgraph induced by ``members`` containing ``Q``.

    Returns the node set, or ``None`` when peeling drops a query node or
    leaves the query nodes in different components.
    """
    alive = peel(g, members, k)
    if any(q not in alive for q in Q):
        return None
    comp = bfs_component(g, alive, Q[0])
    if any(q not in comp for q in Q):
        return None
    return comp


def is_connected_kcore_containing(h: Subgraph, Q: Iterable[int], k: int) -> bool:
    """Structural check: ``h`` is non-empty, connected, min induced degree >= k, and holds Q."""
    mem = h.members
    if not mem or any(q not in mem for q in Q):
        return False
    if any(h.degree(v) < k for v in mem):
        return False
    return len(bfs_component(h.parent, mem, next(iter(mem)))) == len(mem)

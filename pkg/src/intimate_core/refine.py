"""Shrinking a feasible candidate toward a small-weight intimate-core group.

Refinement deletes the heaviest unprotected nodes in batches (``bulk``) or
one at a time (``single``), re-peels to a connected k-core around the
query after each deletion, and halves the batch when a deletion would
break feasibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import is_connected_kcore_containing
from .errors import InfeasibleInput
from .graph import Subgraph, bfs_component, group_weight

__all__ = ["RefineConfig", "RunStats", "GroupResult", "protected_closure", "refine"]

MODES = ("bulk", "single")
SCORERS = ("sum", "max")


@dataclass(frozen=True)
class RefineConfig:
    epsilon: float = 0.1
    mode: str = "bulk"
    scorer: str = "sum"
    # keep the protected/deleted sets of every attempt in RunStats.trace
    trace: bool = False

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.scorer not in SCORERS:
            raise ValueError(f"scorer must be one of {SCORERS}, got {self.scorer!r}")


@dataclass
class RunStats:
    tree_ms: float = 0.0
    expand_ms: float = 0.0
    refine_ms: float = 0.0
    iterations: int = 0
    l_max: int = 0
    # candidate size and weight per accepted iteration, iteration 0 = initial candidate
    sizes: list[int] = field(default_factory=list)
    weights: list[float] = field(default_factory=list)
    trace: list[dict] = field(default_factory=list)

    @property
    def total_ms(self) -> float:
        return self.tree_ms + self.expand_ms + self.refine_ms

    def as_dict(self) -> dict:
        return {
            "tree_ms": self.tree_ms,
            "expand_ms": self.expand_ms,
            "refine_ms": self.refine_ms,
            "iterations": self.iterations,
            "l_max": self.l_max,
            "sizes": list(self.sizes),
            "weights": list(self.weights),
        }


@dataclass
class GroupResult:
    subgraph: Subgraph | None
    weight: float | None
    feasible: bool
    stats: RunStats = field(default_factory=RunStats)
    reason: str | None = None

    @property
    def members(self) -> frozenset:
        return self.subgraph.members if self.subgraph is not None else frozenset()

    @classmethod
    def infeasible(cls, reason: str, stats: RunStats | None = None) -> "GroupResult":
        return cls(None, None, False, stats or RunStats(), reason)


def protected_closure(candidate: Subgraph, Q: Iterable[int], k: int) -> frozenset:
    """Smallest superset of Q closed under: a protected node with induced
    degree exactly k pulls in all of its candidate neighbours."""
    mem = candidate.members
    adj = candidate.parent._adj
    deg = {v: sum(1 for u, _ in adj[v] if u in mem) for v in mem}
    return frozenset(_protect(adj, mem, deg, Q, k))


def _protect(adj, members, deg, Q, k) -> set[int]:
    prot = set(Q)
    stack = list(prot)
    while stack:
        p = stack.pop()
        if deg[p] != k:
            continue
        for u, _ in adj[p]:
            if u in members and u not in prot:
                prot.add(u)
                stack.append(u)
    return prot


def _scores(adj, members, nodes, scorer):
    out = {}
    for v in nodes:
        ws = [w for u, w in adj[v] if u in members]
        if scorer == "sum":
            out[v] = math.fsum(ws)
        else:
            out[v] = max(ws, default=0.0)
    return out


def _delete(g, members, deg, batch, Q, k):
    """Delete ``batch``, cascade-peel, keep the component of Q.

    Returns the new ``(members, degrees)`` or ``None`` if Q does not survive
    in one component. Inputs are not modified.
    """
    adj = g._adj
    alive = set(members)
    d = dict(deg)
    stack = list(batch)
    gone = set(batch)
    while stack:
        v = stack.pop()
        alive.discard(v)
        for u, _ in adj[v]:
            if u in alive and u not in gone:
                d[u] -= 1
                if d[u] < k:
                    gone.add(u)
                    stack.append(u)
    if any(q in gone for q in Q):
        return None
    comp = bfs_component(g, alive, Q[0])
    if any(q not in comp for q in Q):
        return None
    return comp, {v: d[v] for v in comp}


def refine(candidate: Subgraph, Q: Sequence[int], k: int, cfg: RefineConfig | None = None) -> GroupResult:
    """Shrink ``candidate`` by deleting heavy unprotected nodes.

    Each round scores every unprotected node by its incident induced edge
    weight and tries to delete the top ``ceil(epsilon * r)`` of them (one in
    ``single`` mode). A deletion that leaves no connected k-core around Q
    is rolled back and retried with half the batch; when a single-node
    deletion fails the search stops. The last accepted candidate is
    returned; its weight never increases across rounds.
    """
    cfg = cfg or RefineConfig()
    Q = list(Q)
    if not is_connected_kcore_containing(candidate, Q, k):
        raise InfeasibleInput("candidate is not a connected k-core containing the query")
    g = candidate.parent
    adj = g._adj
    cur = set(candidate.members)
    deg = {v: sum(1 for u, _ in adj[v] if u in cur) for v in cur}
    best_w = group_weight(candidate)
    stats = RunStats(sizes=[len(cur)], weights=[best_w])

    while True:
        prot = _protect(adj, cur, deg, Q, k)
        removable = [v for v in cur if v not in prot]
        if not removable:
            break
        score = _scores(adj, cur, removable, cfg.scorer)
        removable.sort(key=lambda v: (-score[v], -v))
        b = 1 if cfg.mode == "single" else math.ceil(cfg.epsilon * len(removable))
        accepted = None
        while True:
            batch = removable[:b]
            trial = _delete(g, cur, deg, batch, Q, k)
            if cfg.trace:
                stats.trace.append({
                    "iteration": stats.iterations + 1,
                    "protected": frozenset(prot),
                    "deleted": tuple(batch),
                    "accepted": trial is not None,
                })
            if trial is not None:
                accepted = trial
                break
            if b == 1:
                break
            b = max(1, b // 2)
        if accepted is None:
            break
        new_members, new_deg = accepted
        w = group_weight(Subgraph(g, new_members))
        if not w < best_w:
            break
        cur, deg, best_w = new_members, new_deg, w
        stats.iterations += 1
        stats.sizes.append(len(cur))
        stats.weights.append(w)

    return GroupResult(Subgraph(g, cur), best_w, True, stats)

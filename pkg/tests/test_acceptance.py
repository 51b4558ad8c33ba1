"""End-to-end acceptance checks.

Each test is marked ``acceptance`` and reports one PASS/FAIL line in the
terminal summary (see conftest.py). Time limits cover the package code
under test; reference oracles run outside the timed region.
"""

import math
import random
import statistics
import time

import pytest

from intimate_core import (
    STRATEGIES,
    QuerySpec,
    RefineConfig,
    WeightedGraph,
    core_decompose,
    dijkstra_sssp,
    group_weight,
    induced_subgraph,
    maximal_connected_kcore,
    oracle_min_group,
    refine,
)
from intimate_core.bench import generate_workload, run_workload
from intimate_core.cli import main as cli_main
from intimate_core.core import kcore_of
from intimate_core.errors import Disconnected
from intimate_core.generate import powerlaw_graph
from intimate_core.graph import connected_component_containing
from intimate_core.search import search
from intimate_core.toygraphs import two_community_graph

from helpers import random_edges
from oracles import floyd_warshall, is_connected_kcore, naive_coreness

pytestmark = pytest.mark.acceptance


class Timer:
    def __init__(self):
        self.elapsed = 0.0

    def __enter__(self):
        self._t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed += time.perf_counter() - self._t


def _graph(edges, n):
    return WeightedGraph.from_edges(edges, range(n))


def test_c1_core_decomposition_matches_fixpoint():
    rng = random.Random(101)
    timer = Timer()
    mismatches = 0
    for _ in range(200):
        n = rng.randint(1, 200)
        avg = rng.choice([1, 3, 6, 12, 25])
        edges = random_edges(rng, n, min(1.0, avg / max(1, n - 1)))
        g = _graph(edges, n)
        with timer:
            idx = core_decompose(g)
        expected = naive_coreness(n, edges)
        mismatches += sum(idx[v] != expected[v] for v in range(n))
    assert mismatches == 0
    assert timer.elapsed < 10, timer.elapsed


def test_c2_dijkstra_matches_floyd_warshall():
    rng = random.Random(202)
    timer = Timer()
    worst = 0.0
    for _ in range(100):
        n = rng.randint(2, 15)
        edges = random_edges(rng, n, rng.uniform(0.15, 0.8))
        g = _graph(edges, n)
        dist = floyd_warshall(n, edges)
        for s in range(n):
            with timer:
                paths = dijkstra_sssp(set(range(n)), s, range(n), g)
            for t in range(n):
                if math.isinf(dist[s][t]):
                    assert t not in paths
                    continue
                got = paths[t].weight
                if dist[s][t]:
                    worst = max(worst, abs(got - dist[s][t]) / dist[s][t])
                else:
                    assert got == 0
    assert worst <= 1e-12
    assert timer.elapsed < 5, timer.elapsed


def _random_instance(rng, n_lo, n_hi):
    n = rng.randint(n_lo, n_hi)
    edges = random_edges(rng, n, rng.uniform(0.15, 0.6), integer=rng.random() < 0.5)
    g = _graph(edges, n)
    k = rng.randint(1, 4)
    Q = tuple(rng.sample(range(n), rng.randint(1, min(4, n))))
    return g, edges, Q, k


def test_c3_feasible_results_are_connected_kcores():
    rng = random.Random(303)
    timer = Timer()
    violations = feasible = 0
    for _ in range(500):
        g, edges, Q, k = _random_instance(rng, 5, 60)
        with timer:
            idx = core_decompose(g)
            results = [search(g, idx, QuerySpec(Q, k, s)) for s in STRATEGIES]
        for res in results:
            if res.feasible:
                feasible += 1
                violations += not is_connected_kcore(res.members, edges, Q, k)
    assert feasible > 200
    assert violations == 0
    assert timer.elapsed < 30, timer.elapsed


def test_c4_oracle_sandwich():
    rng = random.Random(404)
    timer = Timer()
    violations = solvable = 0
    for _ in range(200):
        g, _, Q, k = _random_instance(rng, 4, 12)
        best = oracle_min_group(g, Q, k)
        solvable += best is not None
        with timer:
            idx = core_decompose(g)
            results = [search(g, idx, QuerySpec(Q, k, s)) for s in STRATEGIES]
        for res in results:
            if best is None:
                violations += res.feasible
            elif not res.feasible or res.weight < best[0]:
                violations += 1
    assert solvable > 40
    assert violations == 0
    assert timer.elapsed < 60, timer.elapsed


def test_c5_worked_example():
    t = time.perf_counter()
    g = two_community_graph()
    g1 = induced_subgraph(g, [g.node_of(v) for v in (1, 2, 3, 4)])
    assert group_weight(g1) == 15
    core3 = kcore_of(g, core_decompose(g), 3)
    comps = set()
    for v in core3.members:
        comps.add(frozenset(connected_component_containing(core3, v)))
    assert len(comps) == 2
    assert time.perf_counter() - t < 1


def _k4_chain(blocks):
    """K4 blocks joined in a line by single bridge edges; one connected 3-core."""
    edges = []
    for b in range(blocks):
        base = 4 * b
        edges += [(base + i, base + j, 1.0 + ((i + j + b) % 3)) for i in range(4) for j in range(i + 1, 4)]
        if b:
            edges.append((base - 1, base, 2.0))
    return WeightedGraph.from_edges(edges)


def test_c6_local_candidate_smaller_than_global():
    t = time.perf_counter()
    g = _k4_chain(40)
    idx = core_decompose(g)
    Q, k = (0, 1), 3
    component = maximal_connected_kcore(g, idx, Q, k)
    hop2 = set(Q)
    for _ in range(2):
        hop2 |= {u for v in hop2 for u, _ in g.neighbors(v)}
    assert len(component) >= 10 * len(hop2)
    for local in ("tree-path", "tree-mst"):
        loc = search(g, idx, QuerySpec(Q, k, local))
        glob = search(g, idx, QuerySpec(Q, k, "global-icgm"))
        assert loc.stats.sizes[0] < glob.stats.sizes[0]
    assert time.perf_counter() - t < 5


def test_c7_quality_direction_on_powerlaw():
    t = time.perf_counter()
    g = powerlaw_graph(2000, seed=1, avg_degree=10)
    idx = core_decompose(g)
    wl = generate_workload(idx, [4], [3], 100, seed=7)
    recs = run_workload(g, idx, wl, ["tree-path", "global-icgm"])
    by_q = {}
    for r in recs:
        by_q.setdefault(r.query_id, {})[r.strategy] = r
    both = [d for d in by_q.values() if all(x.feasible for x in d.values())]
    assert len(both) >= 90
    w_loc = statistics.median(d["tree-path"].weight for d in both)
    w_glob = statistics.median(d["global-icgm"].weight for d in both)
    t_loc = statistics.median(d["tree-path"].total_ms for d in both)
    t_glob = statistics.median(d["global-icgm"].total_ms for d in both)
    print(f"median weight {w_loc:.3f} vs {w_glob:.3f}; median ms {t_loc:.1f} vs {t_glob:.1f}")
    assert w_loc <= w_glob
    assert t_loc < t_glob
    assert time.perf_counter() - t < 300


def test_c8_bench_csv_is_deterministic(tmp_path, capsys):
    t = time.perf_counter()
    graph, index = tmp_path / "g.txt", tmp_path / "g.idx"
    assert cli_main(["gen", "--nodes", "400", "--model", "powerlaw", "--seed", "11", "--out", str(graph)]) == 0
    outs = []
    for run in range(2):
        out = tmp_path / f"bench{run}.csv"
        code = cli_main(["bench", str(graph), str(index), "--protocol", "vary-k", "--seed", "5",
                         "--out", str(out)])
        assert code == 0
        outs.append(out.read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]
    assert outs[0].count(b"\n") == 2 + 4 * 4 * 100
    assert time.perf_counter() - t < 300


def test_c9_protected_nodes_never_deleted():
    rng = random.Random(909)
    timer = Timer()
    runs = violations = 0
    while runs < 200:
        n = rng.randint(10, 60)
        g = _graph(random_edges(rng, n, rng.uniform(0.1, 0.4)), n)
        idx = core_decompose(g)
        k = rng.randint(1, 4)
        pool = [v for v in range(n) if idx[v] >= k]
        if not pool:
            continue
        Q = rng.sample(pool, rng.randint(1, min(3, len(pool))))
        try:
            cand = maximal_connected_kcore(g, idx, Q, k)
        except Disconnected:
            continue
        cfg = RefineConfig(epsilon=rng.choice([0.05, 0.1, 0.3, 0.6]), mode=rng.choice(["bulk", "single"]),
                           scorer=rng.choice(["sum", "max"]), trace=True)
        with timer:
            res = refine(cand, Q, k, cfg)
        runs += 1
        for step in res.stats.trace:
            violations += bool(set(step["deleted"]) & step["protected"])
            violations += not set(Q) <= step["protected"]
        violations += not set(Q) <= res.members
    assert violations == 0
    assert timer.elapsed < 30, timer.elapsed

# Grow a seed tree into a k-core, then shave off heavy nodes.

import numpy as np

from intimate_core import (
    RefineConfig,
    build_tree_path,
    core_decompose,
    expand_to_kcore,
    maximal_connected_kcore,
    refine,
)
from intimate_core.generate import powerlaw_graph

g = powerlaw_graph(1500, seed=4, avg_degree=8)
idx = core_decompose(g)
print(g, "max coreness", idx.delta_max)

k = 4
rng = np.random.default_rng(0)
pool = idx.nodes_with_coreness_at_least(k)
Q = sorted(int(v) for v in rng.choice(pool, size=3, replace=False))
print("query", [g.label_of(v) for v in Q])

tree = build_tree_path(g, idx, Q, k)
print("seed tree", len(tree.nodes), "nodes, weight", round(tree.weight, 3))

# Each BFS level adds nodes; the first level that peels into a k-core wins.
local, stats = expand_to_kcore(g, idx, Q, k, tree)
print("levels", stats.l_max, "accumulated sizes", stats.accumulated_sizes)

whole = maximal_connected_kcore(g, idx, Q, k)
print("local candidate", len(local), "vs whole component", len(whole))

# Bulk deletion, then one node at a time.
for mode in ("bulk", "single"):
    res = refine(local, Q, k, RefineConfig(mode=mode))
    print(mode, "iterations", res.stats.iterations, "size", len(res.members), "weight", round(res.weight, 3))

# Batch size changes where refinement stops.
for eps in (0.05, 0.1, 0.3, 0.6):
    res = refine(local, Q, k, RefineConfig(epsilon=eps))
    print(f"eps={eps:<4} size={len(res.members):4d} weight={res.weight:.3f}")

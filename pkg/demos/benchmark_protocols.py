# Run the vary-k protocol on a synthetic graph and compare strategies.

import numpy as np

from intimate_core import core_decompose
from intimate_core.bench import median_by, run_bench
from intimate_core.generate import powerlaw_graph

g = powerlaw_graph(1000, seed=2)
idx = core_decompose(g)
print(g)

records = run_bench(g, idx, "vary-k", seed=0, n_queries=20)

weights = median_by(records, lambda r: (r.k, r.strategy), lambda r: r.weight)
millis = median_by(records, lambda r: (r.k, r.strategy), lambda r: r.total_ms)
print(f"{'k':>2} {'strategy':12s} {'weight':>9} {'ms':>8}")
for key in weights:
    print(f"{key[0]:>2} {key[1]:12s} {weights[key]:9.3f} {millis[key]:8.1f}")

# How much smaller is the local starting candidate?
init = median_by(records, lambda r: r.strategy, lambda r: r.initial_size)
print({s: int(v) for s, v in init.items()})

feasible = np.mean([r.feasible for r in records])
print("feasible fraction", feasible)

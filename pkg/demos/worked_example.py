# Two small communities joined through a chain of light edges.
# Which group of friends around nodes 8 and 10 is the most intimate?

from intimate_core import QuerySpec, core_decompose, group_weight, induced_subgraph, oracle_min_group
from intimate_core.core import kcore_of
from intimate_core.graph import connected_component_containing
from intimate_core.search import search
from intimate_core.toygraphs import two_community_graph

g = two_community_graph()
print(g)

# Coreness of every node, by external label.
idx = core_decompose(g)
print({g.label_of(v): idx[v] for v in g.nodes()})

# The 3-core drops nodes 5 and 6 and falls apart into two pieces.
core3 = kcore_of(g, idx, 3)
pieces = {frozenset(connected_component_containing(core3, v)) for v in core3.members}
for p in sorted(pieces, key=min):
    print(sorted(g.label_of(v) for v in p))

# Weight of the left clique.
left = induced_subgraph(g, [g.node_of(v) for v in (1, 2, 3, 4)])
print("left clique weight", group_weight(left))

# Every strategy finds the same K4 here, and so does brute force.
Q = (g.node_of(8), g.node_of(10))
for strategy in ("tree-mst", "tree-path", "global-icgm", "global-icgs"):
    res = search(g, idx, QuerySpec(Q, 3, strategy))
    print(f"{strategy:12s}", sorted(g.label_of(v) for v in res.members), res.weight)

w, members = oracle_min_group(g, Q, 3)
print("oracle      ", sorted(g.label_of(v) for v in members), w)

# Seed trees connect the query nodes cheaply before any expansion happens.

from intimate_core import build_tree_mst, build_tree_path, core_decompose, dijkstra_sssp
from intimate_core.core import kcore_of
from intimate_core.toygraphs import six_node_graph

g = six_node_graph()
idx = core_decompose(g)
Q = [g.node_of(1), g.node_of(2), g.node_of(5)]

# Shortest paths from node 1, restricted to the 1-core.
universe = kcore_of(g, idx, 1).members
for t, path in sorted(dijkstra_sssp(universe, Q[0], Q[1:], g).items()):
    print(g.label_of(t), [g.label_of(v) for v in path.nodes], path.weight)


def show(tree):
    return sorted((g.label_of(u), g.label_of(v), w) for u, v, w in tree.edges)


# MST over the union of pairwise shortest paths.
mst = build_tree_mst(g, idx, Q, 1)
print("mst ", show(mst), mst.weight)

# Greedy chaining to the nearest unconnected query node.
path = build_tree_path(g, idx, Q, 1)
print("path", show(path), path.weight)

# The heavy hub node 6 never makes it into either tree.
print(g.node_of(6) in mst.nodes, g.node_of(6) in path.nodes)

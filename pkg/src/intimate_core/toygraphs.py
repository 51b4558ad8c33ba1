"""Small hand-built graphs used by the tests and demos.

``two_community_graph``: 12 nodes, 20 edges. Its 3-core has two connected
components, ``{1, 2, 3, 4}`` (total weight 15) and ``{7, ..., 12}``.
Node 5 hangs between them with degree 2. For ``Q = {8, 10}`` and
``k = 3`` the best group is the 4-clique ``{8, 9, 10, 11}`` of weight 13.

``six_node_graph``: 6 nodes, 8 edges, all in the 2-core. For
``Q = {1, 2, 5}``, the query-pair shortest paths are 1-3-2, 1-3-4-5 and
2-5; a spanning tree over them weighs 7, and from node 1 the nearest
other query node is 5.
"""

from __future__ import annotations

from .graph import WeightedGraph

TWO_COMMUNITY_EDGES = [
    # left community: 4-clique of weight 15
    (1, 2, 3), (1, 3, 5), (1, 4, 2), (2, 3, 1), (2, 4, 1), (3, 4, 3),
    # bridge of degree-2 nodes
    (4, 5, 2), (5, 6, 1), (6, 7, 3),
    # right community: 4-clique {8, 9, 10, 11} of weight 13 ...
    (8, 9, 2), (8, 10, 1), (8, 11, 3), (9, 10, 2), (9, 11, 3), (10, 11, 2),
    # ... plus nodes 7 and 12
    (7, 9, 2), (7, 11, 5), (7, 12, 4), (9, 12, 3), (11, 12, 1),
]

SIX_NODE_EDGES = [
    (1, 3, 2), (3, 2, 3), (3, 4, 1), (4, 5, 1), (2, 5, 3),
    (1, 6, 10), (6, 2, 10), (6, 4, 10),
]


def two_community_graph() -> WeightedGraph:
    return WeightedGraph.from_edges(TWO_COMMUNITY_EDGES)


def six_node_graph() -> WeightedGraph:
    return WeightedGraph.from_edges(SIX_NODE_EDGES)

import random

from intimate_core import WeightedGraph


def random_edges(rng, n, p, integer=False):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = rng.randint(1, 9) if integer else rng.uniform(0.05, 1.0)
                edges.append((u, v, float(w)))
    return edges


def random_graph(seed, n, p, integer=False):
    """Graph on ``0..n-1`` plus its edge list (internal ids equal labels)."""
    rng = random.Random(seed)
    edges = random_edges(rng, n, p, integer)
    return WeightedGraph.from_edges(edges, range(n)), edges


def labels_of(g, nodes):
    return sorted(g.label_of(v) for v in nodes)

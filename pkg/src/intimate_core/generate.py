"""Seeded synthetic weighted graphs."""

from __future__ import annotations

import numpy as np

from .graph import WeightedGraph

__all__ = ["parse_weight_spec", "gnp_graph", "powerlaw_graph", "generate_graph"]

MODELS = ("gnp", "powerlaw")


def parse_weight_spec(spec: str):
    """``uniform01`` or ``integer:lo:hi``; returns ``draw(rng, size) -> ndarray``."""
    if spec == "uniform01":
        # 1 - U[0, 1) lies in (0, 1], so weights stay strictly positive
        return lambda rng, size: 1.0 - rng.random(size)
    if spec.startswith("integer:"):
        try:
            _, lo, hi = spec.split(":")
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise ValueError(f"bad weight spec {spec!r}; expected integer:lo:hi") from None
        if lo < 1 or hi < lo:
            raise ValueError(f"integer weights need 1 <= lo <= hi, got {lo}:{hi}")
        return lambda rng, size: rng.integers(lo, hi + 1, size).astype(float)
    raise ValueError(f"unknown weight spec {spec!r}")


def _build(n, us, vs, ws):
    edges = zip(us.tolist(), vs.tolist(), ws.tolist())
    return WeightedGraph.from_edges(edges, range(n))


def gnp_graph(n: int, p: float, seed: int, weights: str = "uniform01") -> WeightedGraph:
    """Erdos-Renyi G(n, p) with node ids ``0..n-1``."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    draw = parse_weight_spec(weights)
    us, vs = [], []
    for i in range(n - 1):
        hit = np.flatnonzero(rng.random(n - i - 1) < p) + i + 1
        us.append(np.full(hit.size, i))
        vs.append(hit)
    us = np.concatenate(us) if us else np.empty(0, int)
    vs = np.concatenate(vs) if vs else np.empty(0, int)
    return _build(n, us, vs, draw(rng, us.size))


def powerlaw_graph(
    n: int,
    seed: int,
    weights: str = "uniform01",
    avg_degree: float = 10.0,
    exponent: float = 2.5,
) -> WeightedGraph:
    """Chung-Lu graph whose expected degrees follow a power law.

    Node ``i`` gets expected degree proportional to ``(i + 1) ** (-1 / (exponent - 1))``,
    rescaled to mean ``avg_degree``; pair ``(i, j)`` is joined with
    probability ``min(1, d_i d_j / sum(d))``.
    """
    if exponent <= 2:
        raise ValueError("exponent must exceed 2")
    rng = np.random.default_rng(seed)
    draw = parse_weight_spec(weights)
    expected = (np.arange(n) + 1.0) ** (-1.0 / (exponent - 1.0))
    expected *= avg_degree * n / expected.sum()
    total = expected.sum()
    us, vs = [], []
    for i in range(n - 1):
        prob = np.minimum(1.0, expected[i] * expected[i + 1:] / total)
        hit = np.flatnonzero(rng.random(n - i - 1) < prob) + i + 1
        us.append(np.full(hit.size, i))
        vs.append(hit)
    us = np.concatenate(us) if us else np.empty(0, int)
    vs = np.concatenate(vs) if vs else np.empty(0, int)
    return _build(n, us, vs, draw(rng, us.size))


def generate_graph(model: str, n: int, seed: int, weights: str = "uniform01", **params) -> WeightedGraph:
    if model == "gnp":
        return gnp_graph(n, params.get("p", 0.05), seed, weights)
    if model == "powerlaw":
        return powerlaw_graph(
            n, seed, weights,
            avg_degree=params.get("avg_degree", 10.0),
            exponent=params.get("exponent", 2.5),
        )
    raise ValueError(f"unknown model {model!r}; choose from {MODELS}")

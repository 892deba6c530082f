import random
from importlib import resources

import numpy as np
import pytest

from energyscale.netmetrics import Graph


@pytest.fixture
def data_path():
    root = resources.files("energyscale") / "data"
    return lambda name: str(root / name)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.15) -> Graph:
    """Random spanning tree plus Bernoulli extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def floyd_warshall(g: Graph) -> np.ndarray:
    """All-pairs hop counts by dynamic programming over intermediate nodes."""
    n = g.node_count
    big = n + 1
    d = np.full((n, n), big, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def brute_force_clustering(g: Graph) -> float:
    """Average local clustering by explicit pair enumeration over degree >= 2 nodes."""
    edge_set = {frozenset(e) for e in g.edges()}
    values = []
    for v in range(g.node_count):
        nb = sorted(g.adjacency[v])
        if len(nb) < 2:
            continue
        pairs = [(a, b) for i, a in enumerate(nb) for b in nb[i + 1:]]
        closed = sum(frozenset(p) in edge_set for p in pairs)
        values.append(closed / len(pairs))
    return sum(values) / len(values) if values else 0.0

"""Path length, clustering and entropy of undirected simple graphs."""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _checks
from .errors import (
    DegenerateGraphError,
    DisconnectedGraphError,
    InputParseError,
    EmptyGraphError,
    EntropyUndefinedError,
    ParameterDomainError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on dense node ids ``0..n-1``.

    ``labels[i]`` is the original label of node ``i``. The two ``dropped_*``
    counters record what ingestion discarded.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(self.adjacency))))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build from integer ``(u, v)`` pairs; loops and repeats are dropped."""
        n = _checks.integer(n, "n", 1)
        nbrs = [set() for _ in range(n)]
        loops = dups = 0
        for u, v in edges:
            if u == v:
                loops += 1
            elif v in nbrs[u]:
                dups += 1
            else:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs), (), loops, dups)

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def subgraph(self, nodes) -> "Graph":
        """Induced subgraph, relabelled densely in ascending id order."""
        keep = sorted(nodes)
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[w] for w in self.adjacency[v] if w in index) for v in keep)
        return Graph(adj, tuple(self.labels[v] for v in keep), self.dropped_self_loops, self.dropped_duplicates)


def ingest_edge_list(text: str) -> Graph:
    """Parse a whitespace-separated edge list.

    One edge per line; ``#`` starts a comment line and blank lines are skipped.
    Labels are arbitrary tokens, numbered in order of first appearance. Nodes
    seen only in a self-loop are kept as isolated nodes.

    Raises
    ------
    InputParseError
        A line does not hold exactly two tokens.
    EmptyGraphError
        The document contains no edge lines.
    """
    index: dict[str, int] = {}
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputParseError(f"expected 2 node labels, found {len(tokens)}", lineno, "edges")
        ids = [index.setdefault(tok, len(index)) for tok in tokens]
        pairs.append(ids)
    if not pairs:
        raise EmptyGraphError("edge list contains no edges", "edges")
    g = Graph.from_edges(len(index), pairs)
    return Graph(g.adjacency, tuple(index), g.dropped_self_loops, g.dropped_duplicates)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return ingest_edge_list(fh.read())


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; -1 marks unreachable nodes."""
    dist = [-1] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, ordered by their smallest id."""
    seen = [False] * g.node_count
    comps = []
    for s in range(g.node_count):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def largest_component(g: Graph) -> Graph:
    """Largest connected component; ties go to the one holding the lowest id."""
    comps = connected_components(g)
    best = max(comps, key=len)  # max keeps the first of equal-length components
    return g if len(best) == g.node_count else g.subgraph(best)


def _source_sum(g: Graph, source: int) -> int:
    dist = bfs_distances(g, source)
    if -1 in dist:
        raise DisconnectedGraphError(
            "graph is disconnected; use the largest-component mode", "edges"
        )
    return sum(dist)


def distance_sum(g: Graph, workers: int | None = None) -> tuple[int, int]:
    """Exact ``(sum of pairwise distances, number of unordered pairs)``.

    With ``workers > 1`` the per-source traversals run on a thread pool. Each
    source contributes an integer, so the total does not depend on scheduling.
    """
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError("path length needs at least 2 nodes", "edges")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ordered = sum(pool.map(lambda s: _source_sum(g, s), range(n)))
    else:
        ordered = sum(_source_sum(g, s) for s in range(n))
    # each unordered pair is counted once from each end
    return ordered // 2, n * (n - 1) // 2


def path_length(g: Graph, largest_component_only: bool = False, workers: int | None = None) -> float:
    """Mean shortest-path hop count over all unordered pairs of distinct nodes.

    Raises
    ------
    DisconnectedGraphError
        If the graph is disconnected and ``largest_component_only`` is false.
    DegenerateGraphError
        If fewer than two nodes remain.
    """
    if largest_component_only:
        g = largest_component(g)
    total, pairs = distance_sum(g, workers)
    return total / pairs


def local_clustering(g: Graph, v: int) -> float | None:
    """Fraction of neighbour pairs of ``v`` that are adjacent; None below degree 2."""
    nbrs = g.adjacency[v]
    d = len(nbrs)
    if d < 2:
        return None
    links = sum(len(g.adjacency[u] & nbrs) for u in nbrs) // 2
    return links / (d * (d - 1) / 2)


def clustering_coefficient(g: Graph) -> float:
    """Mean local clustering over nodes of degree >= 2 (0 if there are none)."""
    values = [c for v in range(g.node_count) if (c := local_clustering(g, v)) is not None]
    if not values:
        return 0.0
    return math.fsum(values) / len(values)


@dataclass(frozen=True)
class NetworkReport:
    """Measured path length ``L``, clustering ``C`` and entropy ``C*log_L(n)``."""

    n: float
    path_length: float
    clustering: float
    entropy: float
    e_gap: float
    warnings: tuple[str, ...] = field(default=(), compare=False)


def network_report(L: float, C: float, n: float, warnings=()) -> NetworkReport:
    """Direct-entry report from published scalars (no graph needed).

    Raises
    ------
    EntropyUndefinedError
        If ``L <= 1``, where ``log_L`` has no meaning.
    """
    L = _checks.positive(L, "L")
    C = _checks.real(C, "C")
    if not 0.0 <= C <= 1.0:
        raise ParameterDomainError(f"C must lie in [0, 1], got {C!r}", "C")
    n = _checks.positive(n, "n")
    if L <= 1.0:
        raise EntropyUndefinedError(
            f"entropy undefined for path length {L!r} <= 1 (log base must exceed 1)", "L"
        )
    H = C * math.log(n) / math.log(L)
    return NetworkReport(n, L, C, H, L - math.e, tuple(warnings))


def network_entropy(g: Graph, largest_component_only: bool = False, workers: int | None = None) -> NetworkReport:
    """Full report for a graph: path length, clustering, entropy and gap to e."""
    warnings = []
    if g.dropped_self_loops:
        warnings.append(f"dropped {g.dropped_self_loops} self-loop(s)")
    if g.dropped_duplicates:
        warnings.append(f"dropped {g.dropped_duplicates} duplicate edge(s)")
    if largest_component_only:
        sub = largest_component(g)
        if sub.node_count != g.node_count:
            warnings.append(
                f"restricted to largest component: {sub.node_count} of {g.node_count} nodes"
            )
        g = sub
    L = path_length(g, workers=workers)
    C = clustering_coefficient(g)
    return network_report(L, C, g.node_count, warnings)


def mean_free_path_survival(x: float, l: float) -> float:
    """Probability ``exp(-x/l)`` of travelling at least ``x`` before a collision."""
    x = _checks.nonnegative(x, "x")
    l = _checks.positive(l, "l")
    return math.exp(-x / l)

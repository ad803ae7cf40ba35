"""Support-based models: k-truss and k-tripeak."""

from __future__ import annotations

import heapq
from typing import Iterable

from .graph import Graph, edge_components
from .results import GROUPING_COMPONENTS, SubgraphResult

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _initial_supports(g: Graph, edges: set[Edge]) -> tuple[dict[int, set[int]], dict[Edge, int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    sup = {}
    for u, v in edges:
        sup[(u, v)] = len(adj[u] & adj[v])
    return adj, sup


def truss_decomposition(g: Graph, edges: Iterable[Edge] | None = None
                        ) -> dict[Edge, int]:
    """Trussness of every edge by minimum-support peeling.

    trussness(e) is the largest k such that e survives in the k-truss;
    supports are recomputed exactly as edges are removed. Ties break on the
    lexicographically smallest edge.
    """
    edge_set = set(g.edges()) if edges is None else {_norm(u, v) for u, v in edges}
    adj, sup = _initial_supports(g, edge_set)
    heap = [(s, e) for e, s in sup.items()]
    heapq.heapify(heap)
    trussness: dict[Edge, int] = {}
    k = 2
    alive = set(edge_set)
    while heap:
        s, e = heapq.heappop(heap)
        if e not in alive or s != sup[e]:
            continue
        k = max(k, s + 2)
        trussness[e] = k
        u, v = e
        alive.remove(e)
        adj[u].remove(v)
        adj[v].remove(u)
        for w in adj[u] & adj[v]:
            for f in (_norm(u, w), _norm(v, w)):
                sup[f] -= 1
                heapq.heappush(heap, (sup[f], f))
    return trussness


def k_truss(g: Graph, k: int) -> SubgraphResult:
    """Maximal edge set where every edge has support >= k-2 inside it.

    Groups are connected components over the kept edges; nodes with no kept
    incident edge drop out.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    trussness = truss_decomposition(g)
    kept = [e for e, t in trussness.items() if t >= k]
    comps = edge_components(g, kept)
    return SubgraphResult(model="k-truss", params={"k": k}, groups=tuple(comps),
                          grouping_kind=GROUPING_COMPONENTS)


def k_truss_edges(g: Graph, k: int) -> set[Edge]:
    """Edge set of the k-truss (helper for containment checks)."""
    return {e for e, t in truss_decomposition(g).items() if t >= k}


def tripeak_decomposition(g: Graph) -> dict[Edge, int]:
    """Tricontour value per edge: repeatedly strip the maximum truss.

    Each round truss-decomposes the remaining edges; edges holding the
    maximum trussness form that tricontour and are removed. Triangle-free
    leftovers end with tricontour 2 (the minimum legal trussness).
    """
    alive = set(g.edges())
    tricontour: dict[Edge, int] = {}
    while alive:
        trussness = truss_decomposition(g, alive)
        m = max(trussness.values())
        top = {e for e, t in trussness.items() if t >= m}
        for e in top:
            tricontour[e] = m
        alive -= top
    return tricontour


def k_tripeak(g: Graph, k: int) -> SubgraphResult:
    """Edges with tricontour >= k, grouped as connected components."""
    if k < 2:
        raise ValueError("k must be >= 2")
    tricontour = tripeak_decomposition(g)
    kept = [e for e, t in tricontour.items() if t >= k]
    comps = edge_components(g, kept)
    return SubgraphResult(model="k-tripeak", params={"k": k}, groups=tuple(comps),
                          grouping_kind=GROUPING_COMPONENTS)

"""Degree-based models: k-core, (k,h)-core, (k,p)-core, k-peak."""

from __future__ import annotations

import heapq
from typing import Iterable

from .graph import Graph, bounded_neighborhood
from .results import SubgraphResult, component_result


def core_decomposition(g: Graph, restrict: Iterable[int] | None = None
                       ) -> dict[int, int]:
    """Coreness of every node by minimum-degree peeling.

    Ties break on the smallest id (peeling is confluent; the tie-break only
    fixes the trace). With `restrict`, peels the induced subgraph and labels
    only those nodes.
    """
    alive = set(range(g.node_count)) if restrict is None else set(restrict)
    deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in alive}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    coreness: dict[int, int] = {}
    current = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v not in alive or d != deg[v]:
            continue  # stale entry
        current = max(current, d)
        coreness[v] = current
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return coreness


def k_core(g: Graph, k: int) -> SubgraphResult:
    """Maximal node set whose induced subgraph has minimum degree >= k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    coreness = core_decomposition(g)
    keep = {v for v, c in coreness.items() if c >= k}
    return component_result(g, keep, "k-core", {"k": k})


def kh_core(g: Graph, k: int, h: int) -> SubgraphResult:
    """Iteratively drop nodes with < k others within distance h.

    Distances are measured in the current surviving subgraph, which shrinks
    as nodes are removed; rounds repeat until stable.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if h < 1:
        raise ValueError("h must be >= 1")
    alive = {v for v in range(g.node_count) if g.degree(v) > 0}
    while alive:
        bad = [v for v in alive
               if len(bounded_neighborhood(g, v, h, alive)) < k]
        if not bad:
            break
        alive.difference_update(bad)
    return component_result(g, alive, "kh-core", {"k": k, "h": h})


def kp_core(g: Graph, k: int, p: float) -> SubgraphResult:
    """Maximal subgraph with min degree >= k where every node keeps at least
    a p fraction of its original-graph degree.

    Denominators are degrees in the input graph and are never recomputed.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    alive = {v for v in range(g.node_count) if g.degree(v) > 0}
    deg = {v: g.degree(v) for v in alive}

    def fails(v: int) -> bool:
        return deg[v] < k or deg[v] < p * g.degree(v)

    queue = [v for v in sorted(alive) if fails(v)]
    pending = set(queue)
    while queue:
        v = queue.pop()
        pending.discard(v)
        if v not in alive:
            continue
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if fails(w) and w not in pending:
                    queue.append(w)
                    pending.add(w)
    return component_result(g, alive, "kp-core", {"k": k, "p": p})


def peak_decomposition(g: Graph) -> dict[int, int]:
    """Contour value per node: repeatedly strip the maximum core.

    Each round runs a core decomposition of the remaining graph; nodes of the
    current maximum core receive that coreness as their contour value and are
    removed. Leftover isolated nodes end with contour 0.
    """
    alive = set(range(g.node_count))
    contour: dict[int, int] = {}
    while alive:
        coreness = core_decomposition(g, alive)
        m = max(coreness.values())
        top = {v for v, c in coreness.items() if c >= m}
        for v in top:
            contour[v] = m
        alive -= top
    return contour


def k_peak(g: Graph, k: int) -> SubgraphResult:
    """Nodes with contour value >= k, as connected components."""
    if k < 0:
        raise ValueError("k must be >= 0")
    contour = peak_decomposition(g)
    keep = {v for v, c in contour.items() if c >= k}
    return component_result(g, keep, "k-peak", {"k": k})

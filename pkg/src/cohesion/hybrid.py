"""Alphacore, k-core-truss, (k,s)-core, and SCAN."""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .errors import DegenerateInputError
from .graph import Graph, common_neighbors, edge_components, triangle_count
from .results import (GROUPING_CLUSTERS, SubgraphResult, canonical_groups,
                      component_result)
from .cores import core_decomposition

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- Alphacore ---------------------------------------------------------


def node_features(g: Graph, alive: set[int]) -> tuple[list[int], np.ndarray]:
    """Default feature rows (degree, triangle count) on the surviving subgraph."""
    nodes = sorted(alive)
    rows = []
    for v in nodes:
        deg = sum(1 for w in g.neighbors(v) if w in alive)
        rows.append((deg, triangle_count(g, v, alive)))
    return nodes, np.asarray(rows, dtype=float)


def mahalanobis_depth(features: np.ndarray) -> np.ndarray:
    """Depth of each row against a zero reference point.

    depth(x) = 1 / (1 + x^T S+ x) where S is the empirical covariance of the
    rows and S+ its Moore-Penrose pseudo-inverse (covers singular covariance).
    """
    feats = np.atleast_2d(np.asarray(features, dtype=float))
    if feats.shape[0] < 2:
        raise DegenerateInputError("need at least 2 rows for a covariance")
    cov = np.atleast_2d(np.cov(feats, rowvar=False))
    pinv = np.linalg.pinv(cov)
    quad = np.einsum("ij,jk,ik->i", feats, pinv, feats)
    return 1.0 / (1.0 + np.maximum(quad, 0.0))


def alphacore(g: Graph, alpha: float,
              feature_fn=node_features) -> SubgraphResult:
    """Peel lowest-depth nodes until every survivor has depth >= alpha.

    Each round recomputes features and covariance on the surviving subgraph
    and removes the batch of nodes attaining the minimum depth. Because the
    removal order never depends on alpha (only the stopping point does),
    results are nested: a larger alpha always yields a subset. Fewer than two
    survivors end the peel (covariance undefined), and the remainder is the
    final core.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must be in (0, 1]")
    alive = {v for v in range(g.node_count) if g.degree(v) > 0}
    while len(alive) >= 2:
        nodes, feats = feature_fn(g, alive)
        depths = mahalanobis_depth(feats)
        lowest = depths.min()
        if lowest >= alpha:
            break
        alive -= {v for v, d in zip(nodes, depths) if d == lowest}
    return component_result(g, alive, "alphacore", {"alpha": alpha})


# -- k-core-truss --------------------------------------------------------


def degree_support(g: Graph, e: Edge, alpha: float) -> float:
    """max(support + 2, alpha * min-endpoint-degree), measured in g."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    sup = len(common_neighbors(g, u, v))
    return max(sup + 2, alpha * min(g.degree(u), g.degree(v)))


def k_core_truss(g: Graph, k: int, alpha: float) -> SubgraphResult:
    """Peel edges whose degree-support drops below k; components of the rest.

    Degree-support is recomputed in the shrinking subgraph. Nodes exit when
    they lose all incident edges.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    adj: dict[int, set[int]] = {v: set(g.neighbors(v))
                                for v in range(g.node_count) if g.degree(v) > 0}
    sup: dict[Edge, int] = {}
    for u, v in g.edges():
        sup[(u, v)] = len(adj[u] & adj[v])
    alive = set(sup)

    def degsup(e: Edge) -> float:
        u, v = e
        return max(sup[e] + 2, alpha * min(len(adj[u]), len(adj[v])))

    while True:
        bad = sorted(e for e in alive if degsup(e) < k)
        if not bad:
            break
        for e in bad:
            u, v = e
            if v not in adj[u]:
                continue
            adj[u].remove(v)
            adj[v].remove(u)
            alive.discard(e)
            for w in adj[u] & adj[v]:
                sup[_norm(u, w)] -= 1
                sup[_norm(v, w)] -= 1
    comps = edge_components(g, alive)
    return SubgraphResult(model="k-core-truss", params={"k": k, "alpha": alpha},
                          groups=tuple(comps))


# -- (k,s)-core ----------------------------------------------------------


def ks_core(g: Graph, k: int, s: int) -> SubgraphResult:
    """Nodes that keep at least k strong ties (edges of support >= s).

    Starts from the max(k, s+1)-core, then peels weakly engaged nodes with
    supports recomputed in the shrinking subgraph.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if s < 0:
        raise ValueError("s must be >= 0")
    kprime = max(k, s + 1)
    coreness = core_decomposition(g)
    alive = {v for v, c in coreness.items() if c >= kprime}
    adj: dict[int, set[int]] = {v: {w for w in g.neighbors(v) if w in alive}
                                for v in alive}
    sup: dict[Edge, int] = {}
    for v in alive:
        for w in adj[v]:
            if v < w:
                sup[(v, w)] = len(adj[v] & adj[w])

    while alive:
        bad = sorted(
            v for v in alive
            if sum(1 for w in adj[v] if sup[_norm(v, w)] >= s) < k)
        if not bad:
            break
        for v in bad:
            alive.discard(v)
            for w in list(adj[v]):
                adj[v].remove(w)
                adj[w].remove(v)
                del sup[_norm(v, w)]
                for x in adj[v] & adj[w]:
                    sup[_norm(v, x)] -= 1
                    sup[_norm(w, x)] -= 1
    return component_result(g, alive, "ks-core", {"k": k, "s": s})


# -- SCAN ----------------------------------------------------------------


def structural_similarity(g: Graph, u: int, v: int) -> float:
    """Closed-neighbourhood overlap over the geometric mean of sizes."""
    gu = set(g.neighbors(u)) | {u}
    gv = set(g.neighbors(v)) | {v}
    return len(gu & gv) / math.sqrt(len(gu) * len(gv))


class ScanLabels:
    """Per-node SCAN role ('core' | 'border' | 'outlier') and cluster id."""

    def __init__(self, roles: dict[int, str], clusters: dict[int, int]):
        self.roles = roles
        self.clusters = clusters  # absent for outliers

    def role(self, v: int) -> str:
        return self.roles[v]

    def cluster(self, v: int) -> int | None:
        return self.clusters.get(v)


def scan(g: Graph, k: int, epsilon: float
         ) -> tuple[SubgraphResult, ScanLabels]:
    """Structural clustering: cores, borders attached to them, outliers dropped.

    A node is core when its closed neighbourhood holds >= k epsilon-similar
    members (itself included). Clusters grow by structure-reachability among
    adjacent cores; a border joins the cluster of its smallest-id qualifying
    core.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError("epsilon must be in [0, 1]")
    n = g.node_count
    sim: dict[Edge, float] = {e: structural_similarity(g, *e) for e in g.edges()}

    def eps_neighbors(v: int) -> list[int]:
        return [w for w in g.neighbors(v) if sim[_norm(v, w)] >= epsilon]

    eps_nbrs = {v: eps_neighbors(v) for v in range(n)}
    cores = {v for v in range(n)
             if g.degree(v) > 0 and 1 + len(eps_nbrs[v]) >= k}

    clusters: dict[int, int] = {}
    cluster_id = 0
    for seed in sorted(cores):
        if seed in clusters:
            continue
        queue = deque([seed])
        clusters[seed] = cluster_id
        while queue:
            u = queue.popleft()
            for w in eps_nbrs[u]:
                if w in cores and w not in clusters:
                    clusters[w] = cluster_id
                    queue.append(w)
        cluster_id += 1

    roles = {v: "outlier" for v in range(n)}
    for v in cores:
        roles[v] = "core"
    for v in sorted(set(range(n)) - cores):
        attached = sorted(w for w in eps_nbrs[v] if w in cores)
        if attached:
            roles[v] = "border"
            clusters[v] = clusters[attached[0]]

    groups: dict[int, set[int]] = {}
    for v, cid in clusters.items():
        groups.setdefault(cid, set()).add(v)
    result = SubgraphResult(model="scan", params={"k": k, "epsilon": epsilon},
                            groups=canonical_groups(groups.values()),
                            grouping_kind=GROUPING_CLUSTERS)
    return result, ScanLabels(roles, clusters)

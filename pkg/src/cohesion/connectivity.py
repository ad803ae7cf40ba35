"""Cut-based models: k-vertex- and k-edge-connected components."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Graph, connected_components
from .results import (GROUPING_CLUSTERS, GROUPING_COMPONENTS, SubgraphResult,
                      canonical_groups)

_INF = float("inf")


class _Dinic:
    """Max-flow on a small unit-capacity digraph."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[float] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: float) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0.0)

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[t] >= 0

    def _dfs(self, u: int, t: int, f: float) -> float:
        if u == t:
            return f
        while self.it[u] < len(self.head[u]):
            i = self.head[u][self.it[u]]
            v = self.to[i]
            if self.cap[i] > 0 and self.level[v] == self.level[u] + 1:
                d = self._dfs(v, t, min(f, self.cap[i]))
                if d > 0:
                    self.cap[i] -= d
                    self.cap[i ^ 1] += d
                    return d
            self.it[u] += 1
        return 0.0

    def max_flow(self, s: int, t: int) -> float:
        flow = 0.0
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                f = self._dfs(s, t, _INF)
                if f <= 0:
                    break
                flow += f
        return flow

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def _st_vertex_cut(adj: list[frozenset[int]], s: int, t: int
                   ) -> tuple[int, set[int]]:
    """Minimum s-t vertex cut (s, t non-adjacent) via node splitting."""
    n = len(adj)
    net = _Dinic(2 * n)  # v_in = 2v, v_out = 2v+1
    big = float(n)
    for v in range(n):
        net.add(2 * v, 2 * v + 1, 1.0 if v not in (s, t) else big)
        for w in adj[v]:
            net.add(2 * v + 1, 2 * w, big)
    flow = net.max_flow(2 * s + 1, 2 * t)
    reach = net.residual_reachable(2 * s + 1)
    cut = {v for v in range(n)
           if 2 * v in reach and 2 * v + 1 not in reach}
    return int(round(flow)), cut


def vertex_connectivity(adj: list[frozenset[int]]) -> tuple[int, set[int] | None]:
    """(kappa, minimum vertex cut) of a connected graph given as adjacency.

    Returns (n-1, None) for complete graphs, which have no vertex cut.
    Exhaustive over non-adjacent pairs; intended for modest sizes.
    """
    n = len(adj)
    best = n - 1
    best_cut: set[int] | None = None
    for s in range(n):
        for t in range(s + 1, n):
            if t in adj[s]:
                continue
            c, cut = _st_vertex_cut(adj, s, t)
            if c < best or best_cut is None:
                best, best_cut = c, cut
                if best == 0:
                    return best, best_cut
    return best, best_cut


def k_vcc(g: Graph, k: int) -> SubgraphResult:
    """All maximal node sets (>= k+1 nodes) with vertex connectivity >= k.

    Recursive partitioning: a candidate below the threshold is split along a
    minimum vertex cut into (component + cut) parts. Groups may overlap in
    cut nodes, so the grouping kind is "clusters".
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    results: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    stack: list[frozenset[int]] = [frozenset(c) for c in connected_components(g)
                                   if len(c) >= k + 1]
    while stack:
        cand = stack.pop()
        if cand in seen:
            continue
        seen.add(cand)
        nodes = sorted(cand)
        pos = {v: i for i, v in enumerate(nodes)}
        adj = [frozenset(pos[w] for w in g.neighbors(v) if w in cand)
               for v in nodes]
        comps = connected_components(g, cand)
        if len(comps) > 1:
            stack.extend(frozenset(c) for c in comps if len(c) >= k + 1)
            continue
        kappa, cut = vertex_connectivity(adj)
        if kappa >= k:
            results.append(tuple(nodes))
            continue
        assert cut is not None
        cut_ids = {nodes[i] for i in cut}
        rest = cand - cut_ids
        for comp in connected_components(g, rest):
            part = frozenset(comp) | cut_ids
            if len(part) >= k + 1 and part != cand:
                stack.append(part)
    # subset-filter to keep only maximal candidates
    uniq = sorted({frozenset(r) for r in results}, key=len, reverse=True)
    maximal: list[frozenset[int]] = []
    for cand in uniq:
        if not any(cand < m for m in maximal):
            maximal.append(cand)
    return SubgraphResult(model="k-vcc", params={"k": k},
                          groups=canonical_groups(maximal),
                          grouping_kind=GROUPING_CLUSTERS)


def _stoer_wagner(weights: dict[int, dict[int, int]]) -> tuple[int, set[int]]:
    """Global minimum edge cut (value, one side) of a connected graph."""
    w = {u: dict(nbrs) for u, nbrs in weights.items()}
    groups = {u: {u} for u in w}
    best = -1
    best_side: set[int] = set()
    while len(w) > 1:
        start = min(w)
        in_a = {start}
        wsum = {v: w[start].get(v, 0) for v in w if v != start}
        order = [start]
        while wsum:
            nxt = max(sorted(wsum), key=lambda v: wsum[v])
            order.append(nxt)
            in_a.add(nxt)
            del wsum[nxt]
            for v, wt in w[nxt].items():
                if v not in in_a:
                    wsum[v] = wsum.get(v, 0) + wt
        t = order[-1]
        s = order[-2]
        cut_of_phase = sum(w[t].values())
        if best < 0 or cut_of_phase < best:
            best = cut_of_phase
            best_side = set(groups[t])
        # merge t into s
        for v, wt in list(w[t].items()):
            if v == s:
                continue
            w[s][v] = w[s].get(v, 0) + wt
            w[v][s] = w[s][v]
        for v in w[t]:
            del w[v][t]
        del w[t]
        groups[s] |= groups[t]
        del groups[t]
    return best, best_side


def edge_connectivity(g: Graph, nodes: Iterable[int]) -> tuple[int, set[int]]:
    """(lambda, one side of a minimum cut) for a connected induced subgraph."""
    node_set = set(nodes)
    weights: dict[int, dict[int, int]] = {v: {} for v in node_set}
    for v in node_set:
        for u in g.neighbors(v):
            if u in node_set:
                weights[v][u] = 1
    return _stoer_wagner(weights)


def k_ecc(g: Graph, k: int) -> SubgraphResult:
    """All maximal node sets whose induced subgraph has edge connectivity >= k.

    Recursive global-min-cut partitioning; groups are disjoint and singleton
    leftovers are discarded.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    results: list[tuple[int, ...]] = []
    stack = [set(c) for c in connected_components(g)]
    while stack:
        cand = stack.pop()
        comps = connected_components(g, cand)
        if len(comps) > 1:
            stack.extend(set(c) for c in comps if len(c) >= 2)
            continue
        if len(cand) < 2:
            continue
        lam, side = edge_connectivity(g, cand)
        if lam >= k:
            results.append(tuple(sorted(cand)))
            continue
        stack.append(set(side))
        stack.append(cand - side)
    return SubgraphResult(model="k-ecc", params={"k": k},
                          groups=canonical_groups(results),
                          grouping_kind=GROUPING_COMPONENTS)

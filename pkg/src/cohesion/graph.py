"""Immutable simple undirected graph plus the primitive queries all models share."""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import EdgeListParseError


@dataclass(frozen=True)
class LoadReport:
    """Counters from edge-list ingestion."""

    self_loops_dropped: int = 0
    duplicate_edges_dropped: int = 0


class Graph:
    """Simple undirected unweighted graph with dense 0-based internal ids.

    Instances are immutable after construction and safe to share across
    workers; every query is a pure read. External string labels map to
    internal ids in first-appearance order.
    """

    __slots__ = ("labels", "_index", "adj", "edge_count", "load_report")

    def __init__(self, labels: list[str], adj: list[Iterable[int]],
                 load_report: LoadReport | None = None):
        self.labels: tuple[str, ...] = tuple(labels)
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate node labels")
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(set(ns))) for ns in adj
        )
        if len(self.adj) != len(self.labels):
            raise ValueError("adjacency/label length mismatch")
        for u, ns in enumerate(self.adj):
            for v in ns:
                if v == u:
                    raise ValueError("self-loop in adjacency")
                if u not in self.adj[v]:
                    raise ValueError("asymmetric adjacency")
        self.edge_count: int = sum(len(ns) for ns in self.adj) // 2
        self.load_report: LoadReport = load_report or LoadReport()

    # -- basic queries -------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._nbr_set(u)

    def _nbr_set(self, v: int) -> frozenset:
        # adjacency tuples are small; build sets on demand for membership tests
        return frozenset(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographic order."""
        for u, ns in enumerate(self.adj):
            for v in ns:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self.labels[v]

    def id_of(self, label: str) -> int:
        return self._index[label]

    def has_label(self, label: str) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def from_label_edges(pairs: Iterable[tuple[str, str]],
                     self_loops: int = 0) -> Graph:
    """Build a simple graph from labelled edge pairs, collapsing duplicates."""
    labels: list[str] = []
    index: dict[str, int] = {}
    adj: list[set[int]] = []
    duplicates = 0
    loops = self_loops

    def intern(lab: str) -> int:
        i = index.get(lab)
        if i is None:
            i = len(labels)
            index[lab] = i
            labels.append(lab)
            adj.append(set())
        return i

    for a, b in pairs:
        if a == b:
            # still register the node so it appears (isolated) in the graph
            intern(a)
            loops += 1
            continue
        u, v = intern(a), intern(b)
        if v in adj[u]:
            duplicates += 1
            continue
        adj[u].add(v)
        adj[v].add(u)
    report = LoadReport(self_loops_dropped=loops, duplicate_edges_dropped=duplicates)
    return Graph(labels, adj, report)


def load_edge_list(source: str | bytes | IO) -> Graph:
    """Parse an edge list: one edge per line, two whitespace-separated labels.

    Lines starting with '#' are ignored. Duplicate and reversed-duplicate
    edges collapse; self-loops are dropped and counted in the load report.
    Empty input yields an empty graph.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, line)
        pairs.append((tokens[0], tokens[1]))
    return from_label_edges(pairs)


def load_edge_list_path(path: str) -> Graph:
    with open(path, "rb") as f:
        return load_edge_list(f)


def to_edge_list(g: Graph) -> str:
    """Serialize back to the edge-list format (original labels)."""
    lines = [f"{g.label(u)} {g.label(v)}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Induced subgraph keeping the original labels; ids are re-densified."""
    keep = sorted(set(nodes))
    pos = {v: i for i, v in enumerate(keep)}
    labels = [g.label(v) for v in keep]
    adj = [[pos[w] for w in g.neighbors(v) if w in pos] for v in keep]
    return Graph(labels, adj)


# -- primitive operations ---------------------------------------------


def edge_support(g: Graph, e: tuple[int, int]) -> int:
    """Number of triangles containing edge e = |common neighbours|."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return len(g._nbr_set(u) & g._nbr_set(v))


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return set(g._nbr_set(u) & g._nbr_set(v))


def bounded_neighborhood(g: Graph, v: int, h: int,
                         alive: set[int] | None = None) -> set[int]:
    """All nodes u != v with dist(v, u) <= h, by BFS.

    If `alive` is given, both the walk and the result are restricted to it.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if not (0 <= v < g.node_count):
        raise ValueError(f"invalid node id {v}")
    seen = {v}
    frontier = [v]
    out: set[int] = set()
    for _ in range(h):
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w in seen or (alive is not None and w not in alive):
                    continue
                seen.add(w)
                out.add(w)
                nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return out


def triangle_count(g: Graph, v: int, alive: set[int] | None = None) -> int:
    """Number of triangles containing node v (restricted to `alive` if given)."""
    ns = [w for w in g.neighbors(v) if alive is None or w in alive]
    count = 0
    for i, a in enumerate(ns):
        an = g._nbr_set(a)
        for b in ns[i + 1:]:
            if b in an:
                count += 1
    return count


def connected_components(g: Graph, restrict: Iterable[int] | None = None
                         ) -> list[tuple[int, ...]]:
    """Partition of `restrict` (default: all nodes) into connected components
    of the induced subgraph. Ordered by (size desc, smallest id asc)."""
    if restrict is None:
        alive = set(range(g.node_count))
    else:
        alive = set(restrict)
    comps: list[tuple[int, ...]] = []
    left = set(alive)
    while left:
        start = min(left)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in alive and w not in comp:
                    comp.add(w)
                    queue.append(w)
        left -= comp
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def edge_components(g: Graph, edges: Iterable[tuple[int, int]]
                    ) -> list[tuple[int, ...]]:
    """Connected components over a kept edge set (nodes with no kept edge drop)."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    comps: list[tuple[int, ...]] = []
    left = set(adj)
    while left:
        start = min(left)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        left -= comp
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps

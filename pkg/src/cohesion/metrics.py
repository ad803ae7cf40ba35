"""Global and local quality metrics plus the community-search accuracy protocol."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import UndefinedScoreError
from .graph import Graph
from .results import MetricReport, SubgraphResult


# -- shared helpers ------------------------------------------------------


def _internal_edges(g: Graph, nodes: set[int]) -> int:
    return sum(1 for v in nodes for w in g.neighbors(v) if w > v and w in nodes)


def _boundary_edges(g: Graph, nodes: set[int]) -> int:
    return sum(1 for v in nodes for w in g.neighbors(v) if w not in nodes)


def _volume(g: Graph, nodes: Iterable[int]) -> int:
    return sum(g.degree(v) for v in nodes)


def _triangles_and_triples(g: Graph, nodes: set[int]) -> tuple[int, int]:
    triangles = 0
    triples = 0
    for v in nodes:
        ns = [w for w in g.neighbors(v) if w in nodes]
        d = len(ns)
        triples += d * (d - 1) // 2
        for i, a in enumerate(ns):
            an = set(g.neighbors(a))
            for b in ns[i + 1:]:
                if b in an:
                    triangles += 1
    return triangles // 3, triples


def _inverse_conductance(g: Graph, nodes: set[int]) -> float:
    boundary = _boundary_edges(g, nodes)
    outside = set(range(g.node_count)) - nodes
    denom = min(_volume(g, nodes), _volume(g, outside))
    if denom == 0:
        return 1.0  # no exterior connections possible
    return 1.0 - boundary / denom


# -- metric reports ------------------------------------------------------


def global_metrics(g: Graph, r: SubgraphResult) -> MetricReport:
    """Metrics over the union of all groups treated as a single subgraph H.

    Cut ratio and inverse conductance are 1 when H covers every node (the
    no-exterior convention).
    """
    h = set(r.nodes)
    if not h:
        return MetricReport(level="global", values={})
    nh = len(h)
    eh = _internal_edges(g, h)
    outside = g.node_count - nh
    boundary = _boundary_edges(g, h)
    triangles, triples = _triangles_and_triples(g, h)
    values = {
        "average_degree": 2.0 * eh / nh,
        "cut_ratio": 1.0 if outside == 0 else 1.0 - boundary / (nh * outside),
        "clustering_coefficient": (3.0 * triangles / triples) if triples else 0.0,
        "edge_density": (2.0 * eh / (nh * (nh - 1))) if nh > 1 else 0.0,
        "inverse_conductance": 1.0 if outside == 0 else _inverse_conductance(g, h),
        "average_component_size": sum(len(c) for c in r.groups) / len(r.groups),
    }
    return MetricReport(level="global", values=values)


def local_metrics(g: Graph, r: SubgraphResult) -> MetricReport:
    """Per-group metrics averaged uniformly over groups.

    Modularity uses original-graph degrees for the volume term; a singleton
    group contributes edge density 0.
    """
    if not r.groups:
        return MetricReport(level="local", values={})
    m = g.edge_count
    dens, vdens, invc, mod, sizes = [], [], [], [], []
    for grp in r.groups:
        c = set(grp)
        nc = len(c)
        ec = _internal_edges(g, c)
        dc = _volume(g, c)
        dens.append(2.0 * ec / (nc * (nc - 1)) if nc > 1 else 0.0)
        vdens.append(ec / nc)
        invc.append(_inverse_conductance(g, c) if nc < g.node_count else 1.0)
        mod.append(ec / m - dc * dc / (4.0 * m * m) if m else 0.0)
        sizes.append(nc)
    ngroups = len(r.groups)
    values = {
        "edge_density": sum(dens) / ngroups,
        "vertex_density": sum(vdens) / ngroups,
        "inverse_conductance": sum(invc) / ngroups,
        "modularity": sum(mod) / ngroups,
        "average_component_size": sum(sizes) / ngroups,
    }
    return MetricReport(level="local", values=values)


# -- community search accuracy --------------------------------------------


@dataclass(frozen=True)
class GroundTruth:
    """Disjoint ground-truth communities."""

    communities: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        comms = []
        for c in self.communities:
            cs = tuple(sorted(set(c)))
            if seen & set(cs):
                raise ValueError("ground-truth communities must be disjoint")
            seen.update(cs)
            comms.append(cs)
        object.__setattr__(self, "communities", tuple(comms))

    def community_of(self, q: int) -> tuple[int, ...] | None:
        for c in self.communities:
            if q in c:
                return c
        return None


def load_ground_truth(source: str | bytes | IO, g: Graph) -> GroundTruth:
    """One community per line, whitespace-separated node labels."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    comms = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        comms.append(tuple(g.id_of(tok) for tok in line.split()))
    return GroundTruth(tuple(comms))


@dataclass(frozen=True)
class AccuracyScores:
    nmi: float
    ari: float
    f1: float


def community_for_query(r: SubgraphResult, q: int) -> tuple[int, ...]:
    """The group containing q; for overlapping kinds the largest group wins,
    ties by smallest member. Empty tuple when q is in no group."""
    containing = [grp for grp in r.groups if q in grp]
    if not containing:
        return ()
    containing.sort(key=lambda c: (-len(c), c))
    return containing[0]


def _log(x: float) -> float:
    return math.log(x)


def binary_nmi(pred: set[int], true: set[int], n: int) -> float:
    """NMI of two binary labelings of n items (arithmetic-mean normalization).

    A degenerate split (all-one or all-zero on either side) scores 0.
    """
    a = len(pred)
    b = len(true)
    if a in (0, n) or b in (0, n):
        return 0.0
    n11 = len(pred & true)
    cells = [(n11, a, b), (a - n11, a, n - b),
             (len(true - pred), n - a, b), (n - len(pred | true), n - a, n - b)]
    mi = 0.0
    for nij, ai, bj in cells:
        if nij > 0:
            mi += (nij / n) * _log(n * nij / (ai * bj))
    hp = -(a / n) * _log(a / n) - ((n - a) / n) * _log((n - a) / n)
    ht = -(b / n) * _log(b / n) - ((n - b) / n) * _log((n - b) / n)
    return max(0.0, mi / ((hp + ht) / 2.0))


def binary_ari(pred: set[int], true: set[int], n: int) -> float:
    """Adjusted Rand index of two binary labelings of n items."""
    def c2(x: int) -> float:
        return x * (x - 1) / 2.0

    n11 = len(pred & true)
    n10 = len(pred - true)
    n01 = len(true - pred)
    n00 = n - len(pred | true)
    index = c2(n11) + c2(n10) + c2(n01) + c2(n00)
    row = c2(len(pred)) + c2(n - len(pred))
    col = c2(len(true)) + c2(n - len(true))
    total = c2(n)
    expected = row * col / total if total else 0.0
    maximum = (row + col) / 2.0
    if maximum == expected:
        return 1.0  # both partitions trivial and identical
    return (index - expected) / (maximum - expected)


def binary_f1(pred: set[int], true: set[int]) -> float:
    inter = len(pred & true)
    if inter == 0 or not pred or not true:
        return 0.0
    precision = inter / len(pred)
    recall = inter / len(true)
    return 2.0 * precision * recall / (precision + recall)


def community_accuracy(g: Graph, r: SubgraphResult,
                       truth: GroundTruth) -> AccuracyScores:
    """Macro-averaged binary NMI/ARI/F1 over every result node as a query.

    For each query node q the prediction is membership in the q-containing
    group and the reference is membership in the q-containing ground-truth
    community; queries outside every truth community are skipped.
    """
    n = g.node_count
    nmis, aris, f1s = [], [], []
    for q in sorted(r.nodes):
        true_comm = truth.community_of(q)
        if true_comm is None:
            continue
        pred = set(community_for_query(r, q))
        true = set(true_comm)
        nmis.append(binary_nmi(pred, true, n))
        aris.append(binary_ari(pred, true, n))
        f1s.append(binary_f1(pred, true))
    if not nmis:
        raise UndefinedScoreError("no valid query node")
    k = len(nmis)
    return AccuracyScores(nmi=sum(nmis) / k, ari=sum(aris) / k, f1=sum(f1s) / k)

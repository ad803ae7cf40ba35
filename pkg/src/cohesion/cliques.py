"""Maximal-clique models: At-least-k clique and k-distance clique."""

from __future__ import annotations

from .errors import BudgetExceededError
from .graph import Graph, bounded_neighborhood
from .results import GROUPING_CLIQUES, SubgraphResult, canonical_groups

DEFAULT_CLIQUE_BUDGET = 10_000_000
DEFAULT_CLOSURE_EDGE_BUDGET = 50_000_000


def _bron_kerbosch(adj: list[frozenset[int]], nodes: set[int],
                   budget: int) -> list[tuple[int, ...]]:
    """All maximal cliques via Bron-Kerbosch with pivoting.

    Pivot: the candidate/excluded node covering the most candidates, ties on
    smallest id. Raises BudgetExceededError past `budget` recorded cliques.
    """
    if not nodes:
        return []
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            if len(out) > budget:
                raise BudgetExceededError(
                    f"maximal clique enumeration exceeded budget {budget}")
            return
        pivot = min(p | x, key=lambda u: (-len(p & adj[u]), u))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand([], set(nodes), set())
    return list(canonical_groups(out))


def maximal_cliques(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET
                    ) -> list[tuple[int, ...]]:
    """All maximal cliques of g, canonically ordered. Isolated nodes excluded."""
    adj = [frozenset(g.neighbors(v)) for v in range(g.node_count)]
    nodes = {v for v in range(g.node_count) if g.degree(v) > 0}
    return _bron_kerbosch(adj, nodes, budget)


def at_least_k_clique(g: Graph, k: int,
                      budget: int = DEFAULT_CLIQUE_BUDGET) -> SubgraphResult:
    """All maximal cliques with at least k nodes (groups may overlap)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cliques = [c for c in maximal_cliques(g, budget) if len(c) >= k]
    return SubgraphResult(model="at-least-k-clique", params={"k": k},
                          groups=tuple(cliques), grouping_kind=GROUPING_CLIQUES)


def distance_closure(g: Graph, k: int,
                     edge_budget: int = DEFAULT_CLOSURE_EDGE_BUDGET
                     ) -> list[frozenset[int]]:
    """Adjacency of the distance-<=k closure graph (distances in g).

    The closure can be dense; construction aborts once its edge count passes
    `edge_budget`.
    """
    adj: list[frozenset[int]] = []
    total = 0
    for v in range(g.node_count):
        near = bounded_neighborhood(g, v, k) if g.degree(v) > 0 else set()
        total += len(near)
        if total > 2 * edge_budget:
            raise BudgetExceededError(
                f"distance closure exceeded edge budget {edge_budget}")
        adj.append(frozenset(near))
    return adj


def k_distance_clique(g: Graph, k: int,
                      budget: int = DEFAULT_CLIQUE_BUDGET) -> SubgraphResult:
    """Maximal cliques of the distance-<=k closure graph over the same nodes."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = distance_closure(g, k)
    nodes = {v for v in range(g.node_count) if g.degree(v) > 0}
    cliques = _bron_kerbosch(adj, nodes, budget)
    return SubgraphResult(model="k-distance-clique", params={"k": k},
                          groups=tuple(cliques), grouping_kind=GROUPING_CLIQUES)

"""Model output container and its canonical ordering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph

GROUPING_COMPONENTS = "connected-components"
GROUPING_CLIQUES = "cliques"
GROUPING_CLUSTERS = "clusters"


def canonical_groups(groups: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort members ascending, groups by (size desc, smallest member asc)."""
    gs = [tuple(sorted(set(grp))) for grp in groups]
    gs.sort(key=lambda c: (-len(c), c))
    return tuple(gs)


@dataclass(frozen=True)
class SubgraphResult:
    """A model's output: node groups plus the producing model id and params."""

    model: str
    params: dict
    groups: tuple[tuple[int, ...], ...]
    grouping_kind: str = GROUPING_COMPONENTS

    def __post_init__(self):
        object.__setattr__(self, "groups", canonical_groups(self.groups))

    @property
    def nodes(self) -> frozenset[int]:
        """Union of all groups."""
        out: set[int] = set()
        for grp in self.groups:
            out.update(grp)
        return frozenset(out)

    def group_count(self) -> int:
        return len(self.groups)

    def to_labels(self, g: Graph) -> list[list[str]]:
        return [[g.label(v) for v in grp] for grp in self.groups]


@dataclass(frozen=True)
class MetricReport:
    """Named metric -> value record, tagged local or global."""

    level: str  # "local" | "global"
    values: dict = field(default_factory=dict)


def component_result(g: Graph, nodes: Iterable[int], model: str,
                     params: dict) -> SubgraphResult:
    """Group a surviving node set into connected components.

    Nodes isolated in the original graph never enter any group.
    """
    from .graph import connected_components

    alive = {v for v in nodes if g.degree(v) > 0}
    comps = connected_components(g, alive)
    return SubgraphResult(model=model, params=params, groups=tuple(comps),
                          grouping_kind=GROUPING_COMPONENTS)

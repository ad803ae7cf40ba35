"""Bundled example networks."""

from importlib import resources

from .graph import Graph, load_edge_list

# 13-node toy network used throughout the test-suite (28 edges).
TOY_EDGES = [
    (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
    (4, 6), (5, 6), (6, 7), (6, 8), (6, 9), (6, 10), (7, 8), (7, 9),
    (7, 10), (8, 9), (8, 10), (9, 10), (9, 11), (10, 11),
    (6, 12), (7, 12), (9, 12), (6, 13), (8, 13), (10, 13),
]


def toy_graph() -> Graph:
    """The 13-node example network. Node labels are "1".."13"."""
    text = "\n".join(f"{a} {b}" for a, b in TOY_EDGES)
    return load_edge_list(text)


def toy_ids(g: Graph, labels) -> set[int]:
    """Map integer toy labels to internal ids."""
    return {g.id_of(str(x)) for x in labels}


def karate_graph() -> Graph:
    """Zachary karate club network (34 nodes, 78 edges), labels "1".."34"."""
    data = resources.files("cohesion.data").joinpath("karate.edges").read_bytes()
    return load_edge_list(data)

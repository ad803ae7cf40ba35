from itertools import combinations

from cohesion import k_core, k_ecc, k_vcc
from cohesion.connectivity import edge_connectivity, vertex_connectivity
from cohesion.graph import from_label_edges
from conftest import group_sets
import oracles


def complete(n):
    return from_label_edges([(str(u), str(v))
                             for u, v in combinations(range(n), 2)])


def test_k_vcc_toy(toy):
    got = group_sets(toy, k_vcc(toy, 3))
    assert {6, 7, 8, 9, 10, 12, 13} in got
    assert group_sets(toy, k_vcc(toy, 4)) == [{6, 7, 8, 9, 10}]
    assert k_vcc(toy, 5).groups == ()


def test_k_ecc_toy(toy):
    assert group_sets(toy, k_ecc(toy, 3)) == [
        {6, 7, 8, 9, 10, 12, 13}, {2, 3, 4, 5}]
    assert group_sets(toy, k_ecc(toy, 4)) == [{6, 7, 8, 9, 10}]
    assert k_ecc(toy, 5).groups == ()


def test_complete_graph_qualifies():
    k4 = complete(4)
    assert group_sets(k4, k_vcc(k4, 3)) == [{0, 1, 2, 3}]
    assert group_sets(k4, k_ecc(k4, 3)) == [{0, 1, 2, 3}]


def test_connectivity_primitives():
    k5 = complete(5)
    adj = [frozenset(k5.neighbors(v)) for v in range(5)]
    kappa, cut = vertex_connectivity(adj)
    assert kappa == 4 and cut is None

    path = from_label_edges([("a", "b"), ("b", "c")])
    adj = [frozenset(path.neighbors(v)) for v in range(3)]
    kappa, cut = vertex_connectivity(adj)
    assert kappa == 1 and cut == {path.id_of("b")}

    lam, side = edge_connectivity(path, range(3))
    assert lam == 1


def _supersets(universe, grp):
    extra = sorted(set(universe) - grp)
    for r in range(1, len(extra) + 1):
        for add in combinations(extra, r):
            yield grp | set(add)


def test_k_vcc_oracle(tiny_corpus):
    for g in tiny_corpus[:60]:
        for k in (2, 3):
            groups = [set(grp) for grp in k_vcc(g, k).groups]
            for grp in groups:
                assert oracles.is_k_vertex_connected(g, grp, k)
                # maximality: every strictly larger candidate fails
                for cand in _supersets(range(g.node_count), grp):
                    assert not oracles.is_k_vertex_connected(g, cand, k)


def test_k_ecc_oracle(tiny_corpus):
    for g in tiny_corpus[:30]:
        for k in (2, 3):
            groups = [set(grp) for grp in k_ecc(g, k).groups]
            for grp in groups:
                assert oracles.is_k_edge_connected(g, grp, k)
                for cand in _supersets(range(g.node_count), grp):
                    assert not oracles.is_k_edge_connected(g, cand, k)


def test_k_ecc_groups_disjoint(small_corpus):
    for g in small_corpus[:40]:
        for k in (2, 3):
            seen = set()
            for grp in k_ecc(g, k).groups:
                assert seen.isdisjoint(grp)
                seen.update(grp)


def test_k_ecc_within_k_core(small_corpus):
    for g in small_corpus[:40]:
        for k in (2, 3):
            core = set(k_core(g, k).nodes)
            for grp in k_ecc(g, k).groups:
                assert set(grp) <= core

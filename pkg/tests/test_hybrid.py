import random

import numpy as np
import pytest

from cohesion import (alphacore, degree_support, k_core, k_core_truss,
                      k_truss, ks_core, mahalanobis_depth, scan,
                      structural_similarity)
from cohesion.errors import DegenerateInputError
from cohesion.graph import from_label_edges, induced_subgraph
from conftest import gnp, group_sets, ids


# -- Mahalanobis depth & alphacore -----------------------------------------


def test_depth_at_reference_point():
    feats = np.array([[0.0, 0.0], [1.0, 2.0], [3.0, 1.0]])
    depths = mahalanobis_depth(feats)
    assert depths[0] == pytest.approx(1.0)


def test_depth_identical_rows_all_equal():
    feats = np.array([[2.0, 3.0]] * 5)
    depths = mahalanobis_depth(feats)
    assert np.allclose(depths, depths[0])


def test_depth_requires_two_rows():
    with pytest.raises(DegenerateInputError):
        mahalanobis_depth(np.array([[1.0, 2.0]]))


def test_depth_order_inverse_to_quadratic_form():
    rng = np.random.default_rng(5)
    feats = rng.normal(size=(12, 2)) * [3.0, 7.0]
    cov = np.cov(feats, rowvar=False)
    quad = np.einsum("ij,jk,ik->i", feats, np.linalg.inv(cov), feats)
    depths = mahalanobis_depth(feats)
    assert list(np.argsort(depths)) == list(np.argsort(-quad))


def test_alphacore_tiny_alpha_keeps_everything(toy):
    kept = set(alphacore(toy, 1e-9).nodes)
    assert kept == {v for v in range(toy.node_count) if toy.degree(v) > 0}


def test_alphacore_regular_graph_all_or_nothing():
    cycle = from_label_edges([(str(i), str((i + 1) % 6)) for i in range(6)])
    for alpha in (0.2, 0.5, 1.0):
        kept = set(alphacore(cycle, alpha).nodes)
        assert kept in (set(), set(range(6)))


def test_alphacore_antitone(toy):
    rng = random.Random(4242)
    graphs = [toy] + [gnp(rng, rng.randint(6, 25), rng.uniform(0.1, 0.5))
                      for _ in range(50)]
    alphas = [0.01, 0.05, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0]
    for g in graphs:
        prev = None
        for alpha in alphas:
            cur = set(alphacore(g, alpha).nodes)
            if prev is not None:
                assert cur <= prev
            prev = cur


def test_alphacore_rejects_bad_alpha(toy):
    for alpha in (0.0, -0.1, 1.5):
        with pytest.raises(ValueError):
            alphacore(toy, alpha)


# -- k-core-truss ------------------------------------------------------------


def test_degree_support_examples(toy):
    e = (toy.id_of("1"), toy.id_of("2"))
    assert degree_support(toy, e, 1.0) == 3
    e = (toy.id_of("9"), toy.id_of("11"))
    assert degree_support(toy, e, 1.0) == 3

    shrunk = induced_subgraph(toy, set(range(toy.node_count))
                              - ids(toy, [1, 11]))
    e = (shrunk.id_of("2"), shrunk.id_of("3"))
    assert degree_support(shrunk, e, 1.0) == 4
    for a, b in ((6, 12), (7, 12), (9, 12), (6, 13), (8, 13), (10, 13)):
        e = (shrunk.id_of(str(a)), shrunk.id_of(str(b)))
        assert degree_support(shrunk, e, 1.0) == 4

    e = (toy.id_of("1"), toy.id_of("2"))
    assert degree_support(toy, e, 0.0) == 3  # support + 2 dominates
    with pytest.raises(ValueError):
        degree_support(toy, (toy.id_of("1"), toy.id_of("11")), 1.0)


def test_k_core_truss_toy(toy):
    assert group_sets(toy, k_core_truss(toy, 5, 1.0)) == [{6, 7, 8, 9, 10}]
    assert k_core_truss(toy, 6, 1.0).groups == ()


def test_k_core_truss_alpha0_equals_k_truss(small_corpus):
    for g in small_corpus[:60]:
        for k in (3, 4, 5):
            assert k_core_truss(g, k, 0.0).groups == k_truss(g, k).groups


# -- (k,s)-core ---------------------------------------------------------------


def test_ks_core_toy(toy):
    assert group_sets(toy, ks_core(toy, 3, 2)) == [
        {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13}]
    assert ks_core(toy, 3, 4).groups == ()


def test_ks_core_s0_equals_k_core(small_corpus):
    for g in small_corpus[:60]:
        for k in (2, 3, 4):
            assert ks_core(g, k, 0).groups == k_core(g, k).groups


def test_ks_core_definition(small_corpus):
    # every member keeps >= k incident edges of support >= s inside the result
    for g in small_corpus[:30]:
        for k, s in ((2, 1), (3, 2)):
            kept = set(ks_core(g, k, s).nodes)
            for v in kept:
                strong = 0
                for w in set(g.neighbors(v)) & kept:
                    common = set(g.neighbors(v)) & set(g.neighbors(w)) & kept
                    if len(common) >= s:
                        strong += 1
                assert strong >= k


# -- SCAN ---------------------------------------------------------------------


def test_structural_similarity_examples(toy):
    sim = structural_similarity(toy, toy.id_of("7"), toy.id_of("12"))
    assert sim == pytest.approx(4 / np.sqrt(24))
    a = from_label_edges([("a", "b")])
    assert structural_similarity(a, 0, 1) == pytest.approx(1.0)


def test_scan_toy(toy):
    result, labels = scan(toy, 3, 0.8)
    assert group_sets(toy, result) == [{6, 7, 8, 9, 10, 12, 13}, {2, 3, 4, 5}]
    outliers = {int(toy.label(v)) for v, role in labels.roles.items()
                if role == "outlier"}
    assert outliers == {1, 11}
    assert labels.role(toy.id_of("12")) == "border"
    assert labels.cluster(toy.id_of("12")) == labels.cluster(toy.id_of("7"))
    assert labels.cluster(toy.id_of("11")) is None


def test_scan_epsilon0(small_corpus):
    for g in small_corpus[:20]:
        result, labels = scan(g, 3, 0.0)
        for v in range(g.node_count):
            if g.degree(v) >= 2:
                assert labels.role(v) == "core"


def test_scan_cluster_ids_follow_groups(toy):
    result, labels = scan(toy, 3, 0.8)
    for grp in result.groups:
        assert len({labels.cluster(v) for v in grp}) == 1

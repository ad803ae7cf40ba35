import io
import random

import pytest

from cohesion import (GroundTruth, community_accuracy, community_for_query,
                      global_metrics, k_core, load_ground_truth, local_metrics)
from cohesion.errors import UndefinedScoreError
from cohesion.metrics import binary_ari, binary_f1, binary_nmi
from cohesion.results import SubgraphResult
from conftest import gnp, ids
import oracles


def result_of(g, *label_groups, kind="connected-components"):
    groups = tuple(tuple(ids(g, grp)) for grp in label_groups)
    return SubgraphResult(model="t", params={}, groups=groups,
                          grouping_kind=kind)


# -- global metrics ----------------------------------------------------------


def test_global_hand_values(toy):
    r = result_of(toy, [6, 7, 8, 9, 10])
    values = global_metrics(toy, r).values
    assert values["average_degree"] == pytest.approx(4.0)
    assert values["cut_ratio"] == pytest.approx(0.75, abs=1e-9)
    assert values["inverse_conductance"] == pytest.approx(0.61538, abs=1e-4)
    assert values["edge_density"] == pytest.approx(1.0)
    assert values["clustering_coefficient"] == pytest.approx(1.0)
    assert values["average_component_size"] == pytest.approx(5.0)


def test_global_whole_graph_conventions(toy):
    r = result_of(toy, range(1, 14))
    values = global_metrics(toy, r).values
    assert values["cut_ratio"] == 1.0
    assert values["inverse_conductance"] == 1.0


def test_global_empty(toy):
    r = SubgraphResult(model="t", params={}, groups=())
    assert global_metrics(toy, r).values == {}


def test_global_matches_oracle():
    rng = random.Random(31)
    for _ in range(30):
        g = gnp(rng, rng.randint(4, 20), rng.uniform(0.2, 0.7))
        r = k_core(g, 2)
        if not r.groups:
            continue
        h = set(r.nodes)
        got = global_metrics(g, r).values
        want = oracles.global_metric_values(g, h, r.groups)
        for key, val in want.items():
            assert got[key] == pytest.approx(val), key


# -- local metrics -----------------------------------------------------------


def test_local_hand_values(toy):
    r = result_of(toy, [6, 7, 8, 9, 10])
    values = local_metrics(toy, r).values
    assert values["modularity"] == pytest.approx(0.0702, abs=1e-4)
    assert values["edge_density"] == pytest.approx(1.0)
    assert values["vertex_density"] == pytest.approx(2.0)
    assert values["inverse_conductance"] == pytest.approx(0.61538, abs=1e-4)
    assert values["average_component_size"] == pytest.approx(5.0)


def test_single_group_covering_graph_has_zero_modularity():
    rng = random.Random(8)
    for _ in range(10):
        g = gnp(rng, rng.randint(4, 15), 0.9)
        full = tuple(v for v in range(g.node_count) if g.degree(v) > 0)
        if len(full) != g.node_count:
            continue
        r = SubgraphResult(model="t", params={}, groups=(full,))
        assert local_metrics(g, r).values["modularity"] == 0.0


def test_local_empty(toy):
    r = SubgraphResult(model="t", params={}, groups=())
    assert local_metrics(toy, r).values == {}


# -- ground truth & accuracy ---------------------------------------------------


def test_ground_truth_loading(toy):
    truth = load_ground_truth("1 2 3 4 5\n# note\n6 7 8 9 10 11 12 13\n", toy)
    assert len(truth.communities) == 2
    assert truth.community_of(toy.id_of("7")) == tuple(
        sorted(ids(toy, [6, 7, 8, 9, 10, 11, 12, 13])))
    assert truth.community_of(toy.id_of("1")) is not None


def test_ground_truth_must_be_disjoint():
    with pytest.raises(ValueError):
        GroundTruth(((0, 1), (1, 2)))


def test_ground_truth_from_stream(toy):
    truth = load_ground_truth(io.BytesIO(b"1 2 3\n"), toy)
    assert len(truth.communities) == 1


def test_community_for_query(toy):
    r = result_of(toy, [2, 3, 4, 5], [6, 7, 8, 9, 10], kind="cliques")
    assert set(community_for_query(r, toy.id_of("3"))) == ids(toy, [2, 3, 4, 5])
    assert community_for_query(r, toy.id_of("11")) == ()
    # overlapping groups: the larger one wins
    r = result_of(toy, [2, 3, 4], [2, 3, 4, 5], kind="cliques")
    assert set(community_for_query(r, toy.id_of("2"))) == ids(toy, [2, 3, 4, 5])


def test_binary_scores_degenerate_and_perfect():
    n = 10
    assert binary_nmi({1, 2}, {1, 2}, n) > 0
    assert binary_nmi(set(range(n)), {1, 2}, n) == 0.0
    assert binary_nmi({1, 2}, set(), n) == 0.0
    assert binary_ari({1, 2}, {1, 2}, n) == pytest.approx(1.0)
    assert binary_f1({1, 2}, {1, 2}) == 1.0
    assert binary_f1({1, 2}, {3, 4}) == 0.0


def test_identity_prediction_scores_one(toy):
    truth = load_ground_truth("1 2 3 4 5\n6 7 8 9 10 11 12 13\n", toy)
    r = result_of(toy, [1, 2, 3, 4, 5], [6, 7, 8, 9, 10, 11, 12, 13])
    scores = community_accuracy(toy, r, truth)
    assert scores.nmi == pytest.approx(1.0)
    assert scores.ari == pytest.approx(1.0)
    assert scores.f1 == pytest.approx(1.0)


def test_query2_f1_hand_value(toy):
    truth = load_ground_truth("1 2 3 4 5\n6 7 8 9 10 11 12 13\n", toy)
    r = k_core(toy, 3)
    q = toy.id_of("2")
    pred = set(community_for_query(r, q))
    true = set(truth.community_of(q))
    assert binary_f1(pred, true) == pytest.approx(0.5, abs=1e-9)


def test_accuracy_requires_a_scorable_query(toy):
    truth = load_ground_truth("1 11\n", toy)
    r = result_of(toy, [6, 7, 8, 9, 10])
    with pytest.raises(UndefinedScoreError):
        community_accuracy(toy, r, truth)

"""Cohesive subgraph discovery: fourteen models, metrics, and a bench harness."""

__version__ = "0.1.0"

from .graph import (Graph, bounded_neighborhood, connected_components,
                    edge_support, induced_subgraph, load_edge_list,
                    load_edge_list_path, to_edge_list)
from .results import MetricReport, SubgraphResult
from .cores import core_decomposition, k_core, k_peak, kh_core, kp_core, peak_decomposition
from .trusses import k_tripeak, k_truss, tripeak_decomposition, truss_decomposition
from .cliques import at_least_k_clique, k_distance_clique, maximal_cliques
from .connectivity import k_ecc, k_vcc
from .hybrid import (alphacore, degree_support, k_core_truss, ks_core,
                     mahalanobis_depth, scan, structural_similarity)
from .metrics import (AccuracyScores, GroundTruth, community_accuracy,
                      community_for_query, global_metrics, load_ground_truth,
                      local_metrics)
from .registry import MODELS, default_sweep, parse_params, run_registered
from .datasets import karate_graph, toy_graph

__all__ = [
    "Graph", "SubgraphResult", "MetricReport", "AccuracyScores", "GroundTruth",
    "load_edge_list", "load_edge_list_path", "to_edge_list", "induced_subgraph",
    "edge_support", "bounded_neighborhood", "connected_components",
    "core_decomposition", "k_core", "kh_core", "kp_core",
    "peak_decomposition", "k_peak",
    "truss_decomposition", "k_truss", "tripeak_decomposition", "k_tripeak",
    "maximal_cliques", "at_least_k_clique", "k_distance_clique",
    "k_vcc", "k_ecc",
    "mahalanobis_depth", "alphacore", "degree_support", "k_core_truss",
    "ks_core", "structural_similarity", "scan",
    "global_metrics", "local_metrics", "community_for_query",
    "community_accuracy", "load_ground_truth",
    "MODELS", "default_sweep", "parse_params", "run_registered",
    "toy_graph", "karate_graph",
]

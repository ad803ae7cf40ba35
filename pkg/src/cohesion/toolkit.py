"""Single-run driver: dispatch, metric attachment, and report serialization."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__
from .bench import STATUS_OK, call_with_budget
from .cliques import DEFAULT_CLIQUE_BUDGET
from .graph import Graph, load_edge_list
from .metrics import (community_accuracy, global_metrics, load_ground_truth,
                      local_metrics)
from .registry import get_model, run_registered
from .results import SubgraphResult


@dataclass
class RunConfig:
    model: str
    params: dict
    input_path: str
    output_path: str | None = None
    metric_levels: tuple[str, ...] = ()
    truth_path: str | None = None
    time_budget: float | None = None
    enumeration_budget: int = DEFAULT_CLIQUE_BUDGET
    extras: dict = field(default_factory=dict)


def _load(path: str) -> tuple[Graph, str]:
    with open(path, "rb") as f:
        data = f.read()
    return load_edge_list(data), hashlib.sha256(data).hexdigest()


def run_model(config: RunConfig) -> dict:
    """Run one registered model and assemble a deterministic report document."""
    get_model(config.model)  # validates the id early
    g, digest = _load(config.input_path)

    status, value, seconds = call_with_budget(
        run_registered,
        (config.model, g, config.params, config.enumeration_budget),
        budget=config.time_budget)

    report: dict = {
        "version": __version__,
        "model": config.model,
        "params": config.params,
        "input": {
            "path": config.input_path,
            "sha256": digest,
            "nodes": g.node_count,
            "edges": g.edge_count,
        },
        "node_labels": list(g.labels),
        "status": status,
    }
    if status != STATUS_OK:
        if isinstance(value, str):
            report["detail"] = value
        _maybe_write(report, config.output_path)
        return report

    result: SubgraphResult = value
    report["grouping_kind"] = result.grouping_kind
    report["groups"] = result.to_labels(g)
    metrics = {}
    for level in config.metric_levels:
        rep = global_metrics(g, result) if level == "global" else \
            local_metrics(g, result)
        metrics[level] = rep.values
    if metrics:
        report["metrics"] = metrics
    if config.truth_path:
        with open(config.truth_path, "rb") as f:
            truth = load_ground_truth(f, g)
        scores = community_accuracy(g, result, truth)
        report["accuracy"] = {"nmi": scores.nmi, "ari": scores.ari,
                              "f1": scores.f1}
    _maybe_write(report, config.output_path)
    return report


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _maybe_write(report: dict, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(report_to_json(report))


def result_from_report(report: dict) -> tuple[SubgraphResult, list[str]]:
    """Rebuild a SubgraphResult (internal ids) plus the node label list."""
    labels: list[str] = report["node_labels"]
    index = {lab: i for i, lab in enumerate(labels)}
    groups = tuple(tuple(index[lab] for lab in grp) for grp in report["groups"])
    result = SubgraphResult(model=report["model"], params=report["params"],
                            groups=groups,
                            grouping_kind=report["grouping_kind"])
    return result, labels

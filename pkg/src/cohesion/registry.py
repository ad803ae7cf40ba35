"""Model registry and the default parameter sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import cliques, connectivity, cores, hybrid, trusses
from .cliques import DEFAULT_CLIQUE_BUDGET
from .graph import Graph
from .results import SubgraphResult


@dataclass(frozen=True)
class ModelSpec:
    name: str
    param_types: dict
    run: Callable[..., SubgraphResult]  # run(g, params, enum_budget)
    sweep: tuple[dict, ...]


def _plain(fn):
    def run(g: Graph, params: dict, enum_budget: int) -> SubgraphResult:
        return fn(g, **params)
    return run


def _budgeted(fn):
    def run(g: Graph, params: dict, enum_budget: int) -> SubgraphResult:
        return fn(g, **params, budget=enum_budget)
    return run


def _scan(g: Graph, params: dict, enum_budget: int) -> SubgraphResult:
    result, _labels = hybrid.scan(g, **params)
    return result


def _sweep(name: str, rows: list[list]) -> tuple[dict, ...]:
    keys = name.split(",")
    return tuple(dict(zip(keys, row)) for row in rows)


MODELS: dict[str, ModelSpec] = {
    "k-core": ModelSpec(
        "k-core", {"k": int}, _plain(cores.k_core),
        _sweep("k", [[3], [5], [7], [9]])),
    "kh-core": ModelSpec(
        "kh-core", {"k": int, "h": int}, _plain(cores.kh_core),
        _sweep("k,h", [[3, 2], [5, 2], [7, 2], [9, 2]])),
    "kp-core": ModelSpec(
        "kp-core", {"k": int, "p": float}, _plain(cores.kp_core),
        _sweep("k,p", [[3, 0.2], [3, 0.4], [3, 0.6], [3, 0.8],
                       [5, 0.2], [5, 0.4], [5, 0.6], [5, 0.8]])),
    "k-peak": ModelSpec(
        "k-peak", {"k": int}, _plain(cores.k_peak),
        _sweep("k", [[3], [5], [7], [9]])),
    "k-truss": ModelSpec(
        "k-truss", {"k": int}, _plain(trusses.k_truss),
        _sweep("k", [[4], [6], [8], [10]])),
    "k-tripeak": ModelSpec(
        "k-tripeak", {"k": int}, _plain(trusses.k_tripeak),
        _sweep("k", [[4], [6], [8], [10]])),
    "at-least-k-clique": ModelSpec(
        "at-least-k-clique", {"k": int}, _budgeted(cliques.at_least_k_clique),
        _sweep("k", [[3], [5], [7], [9]])),
    "k-distance-clique": ModelSpec(
        "k-distance-clique", {"k": int}, _budgeted(cliques.k_distance_clique),
        _sweep("k", [[2], [3], [4], [5]])),
    "k-vcc": ModelSpec(
        "k-vcc", {"k": int}, _plain(connectivity.k_vcc),
        _sweep("k", [[3], [5], [7], [9]])),
    "k-ecc": ModelSpec(
        "k-ecc", {"k": int}, _plain(connectivity.k_ecc),
        _sweep("k", [[3], [5], [7], [9]])),
    "alphacore": ModelSpec(
        "alphacore", {"alpha": float}, _plain(hybrid.alphacore),
        _sweep("alpha", [[0.2], [0.4], [0.6], [0.8]])),
    "k-core-truss": ModelSpec(
        "k-core-truss", {"k": int, "alpha": float}, _plain(hybrid.k_core_truss),
        _sweep("k,alpha", [[4, 1.0], [6, 1.0], [8, 1.0], [10, 1.0]])),
    "ks-core": ModelSpec(
        "ks-core", {"k": int, "s": int}, _plain(hybrid.ks_core),
        _sweep("k,s", [[3, 2], [3, 3], [3, 4], [3, 5],
                       [5, 2], [5, 3], [5, 4], [5, 5]])),
    "scan": ModelSpec(
        "scan", {"k": int, "epsilon": float}, _scan,
        _sweep("k,epsilon", [[3, 0.2], [3, 0.4], [3, 0.6], [3, 0.8],
                             [5, 0.2], [5, 0.4], [5, 0.6], [5, 0.8]])),
}


def get_model(model_id: str) -> ModelSpec:
    try:
        return MODELS[model_id]
    except KeyError:
        raise ValueError(f"unknown model {model_id!r}; "
                         f"known: {', '.join(sorted(MODELS))}") from None


def default_sweep(model_id: str) -> list[dict]:
    """The stock q1..q4 parameter settings for a model."""
    return [dict(p) for p in get_model(model_id).sweep]


def q3_params(model_id: str) -> dict:
    """The third entry of the model's first sweep row (the bench default)."""
    return dict(get_model(model_id).sweep[2])


def parse_params(model_id: str, tokens: list[str]) -> dict:
    """Coerce 'name=value' tokens against the model's parameter types."""
    model = get_model(model_id)
    params: dict = {}
    for token in tokens:
        if "=" not in token:
            raise ValueError(f"bad parameter {token!r}; expected name=value")
        name, raw = token.split("=", 1)
        if name not in model.param_types:
            raise ValueError(f"model {model_id!r} takes no parameter {name!r}")
        params[name] = model.param_types[name](raw)
    missing = set(model.param_types) - set(params)
    if missing:
        raise ValueError(f"missing parameters for {model_id!r}: "
                         f"{', '.join(sorted(missing))}")
    return params


def run_registered(model_id: str, g: Graph, params: dict,
                   enum_budget: int = DEFAULT_CLIQUE_BUDGET) -> SubgraphResult:
    return get_model(model_id).run(g, params, enum_budget)

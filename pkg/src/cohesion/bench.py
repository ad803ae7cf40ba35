"""Time-budgeted execution and the scalability benchmark harness."""

from __future__ import annotations

import csv
import io
import json
import multiprocessing as mp
import statistics
import time
import traceback
from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import Graph, load_edge_list_path
from .registry import default_sweep, q3_params, run_registered

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_BUDGET = "budget-exceeded"
STATUS_ERROR = "error"


def _worker(conn, fn, args, kwargs):
    try:
        value = fn(*args, **(kwargs or {}))
        conn.send((STATUS_OK, value))
    except BudgetExceededError as exc:
        conn.send((STATUS_BUDGET, str(exc)))
    except Exception:
        conn.send((STATUS_ERROR, traceback.format_exc()))
    finally:
        conn.close()


def call_with_budget(fn, args=(), kwargs=None, budget: float | None = None
                     ) -> tuple[str, object, float]:
    """Run fn, enforcing a wall-clock budget in a child process.

    Returns (status, value_or_message, seconds). Without a budget the call
    runs in-process.
    """
    if budget is None:
        start = time.perf_counter()
        try:
            value = fn(*args, **(kwargs or {}))
            return STATUS_OK, value, time.perf_counter() - start
        except BudgetExceededError as exc:
            return STATUS_BUDGET, str(exc), time.perf_counter() - start
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_worker, args=(child, fn, args, kwargs))
    start = time.perf_counter()
    proc.start()
    child.close()
    if parent.poll(budget):
        status, value = parent.recv()
        proc.join()
        elapsed = time.perf_counter() - start
        if elapsed > budget:  # finished while the deadline passed
            return STATUS_TIMEOUT, None, elapsed
        return status, value, elapsed
    proc.terminate()
    proc.join()
    return STATUS_TIMEOUT, None, time.perf_counter() - start


@dataclass(frozen=True)
class BenchRecord:
    model: str
    params: dict
    dataset: str
    nodes: int
    edges: int
    seconds: float | None
    groups: int | None
    node_union: int | None
    status: str


def bench(inputs: list[str], models: list[str], sweep: bool = False,
          repeat: int = 3, budget: float | None = None) -> list[BenchRecord]:
    """Time every (dataset, model, params) cell; median of `repeat` runs.

    Graphs are parsed once per dataset so timing isolates the algorithm.
    Per-cell failures become status rows and never abort the sweep.
    """
    records: list[BenchRecord] = []
    for path in sorted(inputs):
        g: Graph = load_edge_list_path(path)
        for model in sorted(models):
            grids = default_sweep(model) if sweep else [q3_params(model)]
            for params in grids:
                records.append(_bench_cell(g, path, model, params,
                                           repeat, budget))
    return records


def _bench_cell(g: Graph, dataset: str, model: str, params: dict,
                repeat: int, budget: float | None) -> BenchRecord:
    times = []
    result = None
    for _ in range(max(1, repeat)):
        status, value, secs = call_with_budget(
            run_registered, (model, g, params), budget=budget)
        if status != STATUS_OK:
            return BenchRecord(model=model, params=params, dataset=dataset,
                               nodes=g.node_count, edges=g.edge_count,
                               seconds=None, groups=None, node_union=None,
                               status=status)
        result = value
        times.append(secs)
    return BenchRecord(model=model, params=params, dataset=dataset,
                       nodes=g.node_count, edges=g.edge_count,
                       seconds=statistics.median(times),
                       groups=result.group_count(),
                       node_union=len(result.nodes), status=STATUS_OK)


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["dataset", "model", "params", "nodes", "edges",
                     "seconds", "groups", "node_union", "status"])
    for r in records:
        writer.writerow([
            r.dataset, r.model, json.dumps(r.params, sort_keys=True),
            r.nodes, r.edges,
            "" if r.seconds is None else f"{r.seconds:.6f}",
            "" if r.groups is None else r.groups,
            "" if r.node_union is None else r.node_union,
            r.status,
        ])
    return buf.getvalue()

"""Bench harness: run solver grids and hold node counts to their theoretical bounds.

Each row records the branching statistics of one seeded run next to the node
bound its parameterization promises. A row above its bound is a correctness
failure of the suite; wall time is reported but never gated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branching import solve_epvcbd, solve_wpvc_bounded_degree, solve_wpvc_by_L
from .errors import InputError
from .generators import (grid_bounded_degree_case, grid_profit_target_case,
                         grid_unit_cost_case)


def unit_cost_node_bound(budget: int) -> int:
    return (2 * budget) ** budget


def bounded_degree_node_bound(budget: int, degree_bound: int) -> int:
    return ((degree_bound + 1) * budget) ** budget


def profit_target_node_bound(target: int) -> int:
    return target ** (4 * target)


@dataclass(frozen=True)
class BenchRow:
    alg: str
    seed: int
    n: int
    m: int
    param: str
    value: int
    verdict: bool
    nodes_expanded: int
    max_depth: int
    wall_ms: float
    bound: int
    ok: bool


def default_config() -> dict:
    return {
        "runs": [
            {"alg": "epvcbd", "grid": [1, 2, 3, 4], "seeds": [0, 1, 2]},
            {"alg": "bounded-degree", "grid": [1, 2, 3, 4], "seeds": [0, 1, 2],
             "degree_bound": 3},
            {"alg": "by-L", "grid": [2, 3, 4, 5], "seeds": [0, 1, 2]},
        ]
    }


def _run_one(alg: str, seed: int, value: int, degree_bound: int) -> BenchRow:
    if alg == "epvcbd":
        inst = grid_unit_cost_case(seed, value)
        rep = solve_epvcbd(inst)
        param = "budget"
        bound = unit_cost_node_bound(value)
        depth_ok = rep.max_depth <= value
    elif alg == "bounded-degree":
        inst = grid_bounded_degree_case(seed, value, degree_bound)
        rep = solve_wpvc_bounded_degree(inst, degree_bound)
        param = "budget"
        bound = bounded_degree_node_bound(value, degree_bound)
        depth_ok = rep.max_depth <= value
    elif alg == "by-L":
        inst = grid_profit_target_case(seed, value)
        rep = solve_wpvc_by_L(inst)
        param = "target"
        bound = profit_target_node_bound(value)
        depth_ok = rep.max_depth < 2 * value
    else:
        raise InputError("unknown bench algorithm %r" % alg)
    return BenchRow(
        alg=alg,
        seed=seed,
        n=inst.graph.n,
        m=inst.graph.m,
        param=param,
        value=value,
        verdict=rep.verdict,
        nodes_expanded=rep.nodes_expanded,
        max_depth=rep.max_depth,
        wall_ms=rep.wall_time * 1000.0,
        bound=bound,
        ok=rep.nodes_expanded <= bound and depth_ok,
    )


def run_config(config: dict) -> list[BenchRow]:
    rows = []
    for entry in config.get("runs", []):
        alg = entry["alg"]
        degree_bound = entry.get("degree_bound", 3)
        for value in entry["grid"]:
            for seed in entry["seeds"]:
                rows.append(_run_one(alg, seed, value, degree_bound))
    return rows


def format_table(rows) -> str:
    headers = ["alg", "seed", "n", "m", "param", "value", "verdict",
               "nodes", "depth", "bound", "wall_ms", "ok"]
    table = [headers]
    for r in rows:
        table.append([r.alg, str(r.seed), str(r.n), str(r.m), r.param,
                      str(r.value), "yes" if r.verdict else "no",
                      str(r.nodes_expanded), str(r.max_depth), str(r.bound),
                      "%.2f" % r.wall_ms, "ok" if r.ok else "VIOLATION"])
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
             for row in table]
    return "\n".join(lines)

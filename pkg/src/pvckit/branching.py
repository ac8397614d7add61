"""Bounded-search-tree solvers for three decision variants.

Each solver recomputes its kernel (the small set some feasible cover must
intersect) from the residual weighted degrees at every node, branches on its
members in ascending vertex id, and tracks branching statistics. Depth and
fan-out bounds are hard assertions, not hopes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InputError, NotBipartiteError, VariantError
from .graph import LEFT, RIGHT, NotBipartite, bipartition, coverage, weighted_degrees
from .instance import (SolveReport, Variant, WpvcInstance, is_trivial, make_solution,
                       residual, validate)


@dataclass
class _Stats:
    nodes_expanded: int = 0
    max_depth: int = 0

    def visit(self, depth: int) -> None:
        if depth > self.max_depth:
            self.max_depth = depth


def _require_valid(inst: WpvcInstance) -> None:
    problems = validate(inst)
    if problems:
        raise InputError("; ".join(problems))


def _take_free_coverage(inst: WpvcInstance):
    """Force every zero-cost vertex that still covers positive profit.

    Free coverage can never hurt, and clearing such vertices up front is what
    makes the zero-budget base case sound.
    """
    taken = []
    while True:
        wdeg = weighted_degrees(inst.graph)
        v = next((u for u in inst.graph.vertices()
                  if inst.graph.costs[u] == 0 and wdeg[u] > 0), None)
        if v is None:
            return taken, inst
        taken.append(v)
        inst = residual(inst, v)


def _finish(inst: WpvcInstance, chain, stats: _Stats, t0: float) -> SolveReport:
    elapsed = time.perf_counter() - t0
    if chain is None:
        return SolveReport(False, None, stats.nodes_expanded, stats.max_depth, elapsed)
    sol = make_solution(inst.graph, chain)
    assert sol.cost <= inst.budget and sol.profit >= inst.target
    return SolveReport(True, sol, stats.nodes_expanded, stats.max_depth, elapsed)


def solve_epvcbd(inst: WpvcInstance) -> SolveReport:
    """Decide a unit-cost instance on a bipartite graph, parameterized by budget.

    At each node, collect the pool of vertices whose residual weighted degree
    times the remaining budget reaches the remaining target (exact integer
    cross-multiplication, no division). A pool of at least twice the budget
    means one side of the bipartition holds budget-many independent high-yield
    vertices whose joint coverage settles the node. A smaller pool must be hit
    by any feasible cover, so we branch on it. Depth stays within the budget
    and fan-out below twice the residual budget.
    """
    t0 = time.perf_counter()
    _require_valid(inst)
    if inst.variant not in (Variant.EPVC, Variant.PVC):
        raise VariantError("solver needs unit vertex costs, got variant %s"
                           % inst.variant.value)
    bp = bipartition(inst.graph)
    if isinstance(bp, NotBipartite):
        raise NotBipartiteError(bp.odd_cycle)
    side = bp.side
    stats = _Stats()
    root_budget = inst.budget

    def search(cur: WpvcInstance, depth: int):
        stats.visit(depth)
        assert depth <= root_budget
        settled = is_trivial(cur)
        if settled is not None:
            return [] if settled else None
        wdeg = weighted_degrees(cur.graph)
        pool = [v for v in cur.graph.vertices() if wdeg[v] * cur.budget >= cur.target]
        if not pool:
            # No single vertex reaches target/budget, so no affordable set
            # reaches the target.
            return None
        if len(pool) >= 2 * cur.budget:
            lefts = [v for v in pool if side[v] == LEFT]
            rights = [v for v in pool if side[v] == RIGHT]
            bigger = lefts if len(lefts) >= len(rights) else rights
            take = bigger[:cur.budget]
            _, got = coverage(cur.graph, take)
            assert got >= cur.target  # independent picks, profits add up
            return take
        assert len(pool) < 2 * cur.budget
        stats.nodes_expanded += 1
        for v in pool:
            found = search(residual(cur, v), depth + 1)
            if found is not None:
                return [v, *found]
        return None

    return _finish(inst, search(inst, 0), stats, t0)


def solve_wpvc_bounded_degree(inst: WpvcInstance, degree_bound: int) -> SolveReport:
    """Decide a weighted instance on a degree-bounded graph, parameterized by budget.

    The kernel keeps, for each cost value up to the residual budget, the vertex
    of that cost with the largest residual coverage, plus all neighbors of
    those picks. A feasible cover avoiding the kernel could swap any member
    for its cost class's top pick without losing coverage or raising cost, so
    the kernel intersects some feasible cover. Kernel size stays within
    (degree_bound + 1) times the residual budget.
    """
    t0 = time.perf_counter()
    _require_valid(inst)
    if not isinstance(degree_bound, int) or degree_bound < 0:
        raise InputError("degree bound must be a non-negative integer")
    if inst.graph.max_degree() > degree_bound:
        raise InputError("graph has a vertex of degree %d, above the bound %d"
                         % (inst.graph.max_degree(), degree_bound))
    stats = _Stats()
    root_budget = inst.budget

    def search(cur: WpvcInstance, depth: int):
        stats.visit(depth)
        assert depth <= root_budget
        prefix, cur = _take_free_coverage(cur)
        settled = is_trivial(cur)
        if settled is not None:
            return prefix if settled else None
        g = cur.graph
        wdeg = weighted_degrees(g)
        best_per_cost: dict[int, int] = {}
        for v in g.vertices():
            c = g.costs[v]
            if 1 <= c <= cur.budget and wdeg[v] > 0:
                held = best_per_cost.get(c)
                if held is None or (wdeg[v], -v) > (wdeg[held], -held):
                    best_per_cost[c] = v
        if not best_per_cost:
            # Every affordable vertex covers zero residual profit.
            return None
        kernel = set(best_per_cost.values())
        spread = set(kernel)
        for u in kernel:
            for e in g.adjacency[u]:
                spread.add(g.other_end(e, u))
        branch = sorted(spread)
        assert len(branch) <= (degree_bound + 1) * cur.budget
        stats.nodes_expanded += 1
        for v in branch:
            if g.costs[v] > cur.budget:
                continue  # never part of a feasible residual cover
            found = search(residual(cur, v), depth + 1)
            if found is not None:
                return [*prefix, v, *found]
        return None

    return _finish(inst, search(inst, 0), stats, t0)


def solve_wpvc_by_L(inst: WpvcInstance) -> SolveReport:
    """Decide a weighted instance on any graph, parameterized by the profit target.

    An affordable vertex whose residual coverage reaches the whole remaining
    target ends the node on its own. Otherwise the kernel keeps, per residual
    coverage value from 1 to target-1, the cheapest vertex attaining it, plus
    every vertex reachable from those picks over a positive-profit edge.
    Swapping any cover member for its coverage class's cheapest pick preserves
    feasibility, so the kernel intersects some feasible cover. Fan-out stays
    below the residual target squared and depth below twice the root target.
    """
    t0 = time.perf_counter()
    _require_valid(inst)
    stats = _Stats()
    root_target = inst.target

    def search(cur: WpvcInstance, depth: int):
        stats.visit(depth)
        assert root_target == 0 or depth < 2 * root_target
        prefix, cur = _take_free_coverage(cur)
        settled = is_trivial(cur)
        if settled is not None:
            return prefix if settled else None
        g = cur.graph
        wdeg = weighted_degrees(g)
        for v in g.vertices():
            if g.costs[v] <= cur.budget and wdeg[v] >= cur.target:
                return [*prefix, v]
        cheapest_per_value: dict[int, int] = {}
        for v in g.vertices():
            w = wdeg[v]
            if 1 <= w < cur.target:
                held = cheapest_per_value.get(w)
                if held is None or (g.costs[v], v) < (g.costs[held], held):
                    cheapest_per_value[w] = v
        if not cheapest_per_value:
            # All affordable vertices cover zero residual profit (anything
            # covering the target alone would have ended the node above).
            return None
        kernel = set(cheapest_per_value.values())
        spread = set(kernel)
        for u in kernel:
            for e in g.adjacency[u]:
                if g.profit(e) > 0:
                    spread.add(g.other_end(e, u))
        branch = sorted(spread)
        assert len(branch) < cur.target * cur.target
        stats.nodes_expanded += 1
        for v in branch:
            if g.costs[v] > cur.budget:
                continue
            found = search(residual(cur, v), depth + 1)
            if found is not None:
                return [*prefix, v, *found]
        return None

    return _finish(inst, search(inst, 0), stats, t0)

"""Solver for the matching-constrained partial cover on bipartite graphs.

Find a set of at most k1 vertices covering at least k2 edges such that the
covered edges contain a matching of size at least k3. The plan: probe for the
smallest budget whose plain cover question is a yes, read off the covered
subgraph, and either its cover number already hands us a large matching
(matching number equals cover number on bipartite graphs) or we grow the
subgraph edge by edge until the cover number reaches k3 exactly.

A consequence of the growth stage: once the plain cover question at budget k1
is a yes, the whole graph has a matching of size k3, and k3 <= k1, the answer
is always yes. The construction is still carried out in full so that every
yes comes with an explicit, independently re-checked witness.
"""

from __future__ import annotations

import time
from bisect import insort

from .errors import InputError, NotBipartiteError, VariantError
from .graph import (LEFT, Graph, NotBipartite, bipartition, coverage, edge_subgraph,
                    max_matching, min_vertex_cover)
from .instance import SolveReport, Variant, WpvcInstance, make_solution
from .branching import solve_epvcbd


def _recheck(g: Graph, bp, vertices, k1: int, k2: int, k3: int) -> None:
    # Independent verification of every yes witness with the core primitives.
    assert len(vertices) <= k1
    covered, _ = coverage(g, vertices)
    assert len(covered) >= k2
    sub, _ = edge_subgraph(g, covered)
    assert max_matching(sub, bp).size >= k3


def _augment(adj, mate, seen, u):
    # Alternating DFS over the grown subgraph; adj maps left vertices to
    # sorted right neighbors, mate maps matched vertices both ways.
    for w in adj.get(u, ()):
        if w in seen:
            continue
        seen.add(w)
        back = mate.get(w)
        if back is None or _augment(adj, mate, seen, back):
            mate[w] = u
            mate[u] = w
            return True
    return False


def solve_pvcbm(g: Graph, k1: int, k2: int, k3: int) -> SolveReport:
    """Decide the matching-constrained cover; unit weights, bipartite only."""
    t0 = time.perf_counter()
    if not all(isinstance(k, int) and k >= 0 for k in (k1, k2, k3)):
        raise InputError("k1, k2, k3 must be non-negative integers")
    if any(c != 1 for c in g.costs) or any(p != 1 for _, _, p in g.edges):
        raise VariantError("matching-constrained solver needs unit costs and profits")
    bp = bipartition(g)
    if isinstance(bp, NotBipartite):
        raise NotBipartiteError(bp.odd_cycle)

    nodes = 0
    depth = 0

    def plain_cover(budget: int) -> SolveReport:
        nonlocal nodes, depth
        rep = solve_epvcbd(WpvcInstance(g, budget, k2, Variant.PVC, True))
        nodes += rep.nodes_expanded
        depth = max(depth, rep.max_depth)
        return rep

    def report(vertices, matching_ids) -> SolveReport:
        _recheck(g, bp, vertices, k1, k2, k3)
        sol = make_solution(g, vertices)
        return SolveReport(True, sol, nodes, depth, time.perf_counter() - t0,
                           matching_edge_ids=frozenset(matching_ids))

    def fail() -> SolveReport:
        return SolveReport(False, None, nodes, depth, time.perf_counter() - t0)

    if k3 > k1:
        return fail()  # k3 matched edges would need k3 distinct cover vertices
    if not plain_cover(k1).verdict:
        return fail()
    for budget in range(k1 + 1):
        probe = plain_cover(budget)
        if probe.verdict:
            least = budget
            chosen = probe.witness.vertices
            break
    covered, _ = coverage(g, chosen)

    if least >= k3:
        sub, back = edge_subgraph(g, covered)
        mat = max_matching(sub, bp)
        # The least sufficient budget is exactly the cover number of the
        # covered subgraph, hence also its matching number.
        assert mat.size == least
        return report(chosen, (back[e] for e in mat.edge_ids))

    if max_matching(g, bp).size < k3:
        return fail()

    # Grow the covered subgraph one edge at a time; each addition moves the
    # cover number up by at most one, and adding everything would reach the
    # whole graph's cover number, which is at least k3.
    grown = set(covered)
    sub, _ = edge_subgraph(g, grown)
    mate = {}
    for e in max_matching(sub, bp).edge_ids:
        u, v, _ = sub.edges[e]
        mate[u] = v
        mate[v] = u
    size = len(mate) // 2
    assert size == least
    adj = {}
    for e in grown:
        u, v, _ = g.edges[e]
        l, r = (u, v) if bp.side[u] == LEFT else (v, u)
        insort(adj.setdefault(l, []), r)
    order = sorted(range(g.m), key=lambda e: g.edges[e][:2])
    for e in order:
        if e in grown:
            continue
        grown.add(e)
        u, v, _ = g.edges[e]
        l, r = (u, v) if bp.side[u] == LEFT else (v, u)
        insort(adj.setdefault(l, []), r)
        # One augmentation settles the new matching number.
        prev = size
        for root in sorted(adj):
            if root not in mate and _augment(adj, mate, set(), root):
                size += 1
                break
        assert size - prev in (0, 1)
        if size == k3:
            break
    else:
        raise RuntimeError("internal invariant broken: cover number never reached k3")

    sub, back = edge_subgraph(g, grown)
    mat = max_matching(sub, bp)
    assert mat.size == k3
    cover = min_vertex_cover(sub, bp, mat)
    assert len(cover) == k3
    return report(cover, (back[e] for e in mat.edge_ids))

"""Shared test helpers: tiny graphs, brute-force oracles independent of the
library's algorithms, and instance relabeling."""

import random
from itertools import combinations

from pvckit import WpvcInstance, coverage, infer_variant, make_graph


def path3(budget=1, target=2):
    """Path a-b-c with unit weights as an instance."""
    g = make_graph(3, [(0, 1), (1, 2)])
    return WpvcInstance(g, budget, target, infer_variant(g), True)


def c4():
    return make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def star(leaf_profits=(1, 1, 1)):
    """Star with center 0 and one leaf per profit."""
    edges = [(0, i + 1, p) for i, p in enumerate(leaf_profits)]
    return make_graph(len(leaf_profits) + 1, edges)


def triangle():
    return make_graph(3, [(0, 1), (1, 2), (0, 2)])


def brute_force_matching_size(g):
    """Maximum matching size by memoized include/exclude over the edge list."""
    edges = [(u, v) for u, v, _ in g.edges]
    memo = {}

    def grow(i, used):
        if i == len(edges):
            return 0
        key = (i, used)
        if key in memo:
            return memo[key]
        u, v = edges[i]
        best = grow(i + 1, used)
        if not (used >> u) & 1 and not (used >> v) & 1:
            best = max(best, 1 + grow(i + 1, used | (1 << u) | (1 << v)))
        memo[key] = best
        return best

    return grow(0, 0)


def brute_force_cover_number(g):
    """Minimum vertex cover size by subset enumeration."""
    if g.m == 0:
        return 0
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v, _ in g.edges):
                return size
    raise AssertionError("unreachable")


def brute_force_verdict(inst, must_contain=()):
    """Feasibility by raw subset enumeration, optionally forcing some vertices."""
    g = inst.graph
    forced = set(must_contain)
    free = [v for v in range(g.n) if v not in forced]
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            chosen = forced | set(combo)
            if sum(g.costs[v] for v in chosen) > inst.budget:
                continue
            if coverage(g, chosen)[1] >= inst.target:
                return True
    return False


def relabeled(inst, seed):
    """The same instance under a random vertex permutation; returns (inst, perm)."""
    rng = random.Random(seed)
    perm = list(range(inst.graph.n))
    rng.shuffle(perm)
    g = inst.graph
    edges = sorted((min(perm[u], perm[v]), max(perm[u], perm[v]), p)
                   for u, v, p in g.edges)
    costs = [0] * g.n
    for v in range(g.n):
        costs[perm[v]] = g.costs[v]
    g2 = make_graph(g.n, edges, costs)
    return WpvcInstance(g2, inst.budget, inst.target, inst.variant,
                        inst.bipartite_required), perm


def random_instance(seed, n_max=8, cost_max=3, profit_max=4, bipartite=False,
                    profit_min=0, cost_min=1):
    """Small random instance for property tests (not one of the fixed suites)."""
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    if bipartite and n >= 2:
        left = rng.randint(1, n - 1)
        slots = [(i, j) for i in range(left) for j in range(left, n)]
    else:
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = rng.randint(0, len(slots))
    edges = [(u, v, rng.randint(profit_min, profit_max))
             for u, v in sorted(rng.sample(slots, m))]
    costs = [rng.randint(cost_min, cost_max) for _ in range(n)]
    g = make_graph(n, edges, costs)
    budget = rng.randint(0, 5)
    target = rng.randint(0, g.total_profit() + 1)
    return WpvcInstance(g, budget, target, infer_variant(g), bipartite)

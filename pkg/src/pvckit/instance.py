"""Problem instances for the partial-cover variants, residual construction,
triviality checks, and solution/report records.

Instances are frozen; ``residual`` returns a fresh instance with the same
vertex-id universe (the forced vertex simply loses all its edges), which keeps
witnesses valid across the whole recursion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .graph import Graph, NotBipartite, bipartition, check_graph, coverage, weighted_degree


class Variant(str, enum.Enum):
    WPVC = "wpvc"  # arbitrary costs, arbitrary profits
    EPVC = "epvc"  # unit costs
    VPVC = "vpvc"  # unit profits
    PVC = "pvc"    # unit costs and profits


def infer_variant(g: Graph) -> Variant:
    """Most specific variant tag consistent with the weights."""
    unit_costs = all(c == 1 for c in g.costs)
    unit_profits = all(p == 1 for _, _, p in g.edges)
    if unit_costs and unit_profits:
        return Variant.PVC
    if unit_costs:
        return Variant.EPVC
    if unit_profits:
        return Variant.VPVC
    return Variant.WPVC


@dataclass(frozen=True)
class WpvcInstance:
    """A graph plus a vertex-cost budget and a covered-profit target."""

    graph: Graph
    budget: int
    target: int
    variant: Variant
    bipartite_required: bool = False


@dataclass(frozen=True)
class CoverSolution:
    """Chosen vertices, optionally one fractionally-taken vertex.

    ``fractional`` is ``(vertex, extent)`` with extent strictly between 0 and
    1. Cost is the sum of integral costs plus extent times the fractional
    vertex's cost. Profit counts edges covered by integral vertices at full
    value and edges covered solely by the fractional vertex at extent value.
    """

    vertices: frozenset[int]
    fractional: tuple[int, Fraction] | None
    cost: int | Fraction
    profit: int | Fraction


@dataclass(frozen=True)
class SolveReport:
    """Verdict, witness, and branching statistics of one solve call.

    ``nodes_expanded`` counts search nodes that actually branched; nodes
    settled by a base case or a direct construction count zero.
    ``matching_edge_ids`` is only populated by the matching-constrained
    solver and oracle.
    """

    verdict: bool
    witness: CoverSolution | None
    nodes_expanded: int
    max_depth: int
    wall_time: float
    matching_edge_ids: frozenset[int] | None = None


def make_solution(g: Graph, vertices, fractional=None) -> CoverSolution:
    """Assemble a :class:`CoverSolution`, computing cost and profit exactly."""
    vertices = frozenset(vertices)
    covered, profit = coverage(g, vertices)
    cost = sum(g.costs[v] for v in vertices)
    if fractional is not None:
        w, extent = fractional
        extent = Fraction(extent)
        if not 0 < extent < 1:
            raise InputError("fractional extent must lie strictly between 0 and 1")
        if w in vertices:
            raise InputError("vertex %d is both integral and fractional" % w)
        sole = sum(g.profit(e) for e in g.adjacency[w] if e not in covered)
        profit = profit + extent * sole
        cost = cost + extent * g.costs[w]
        fractional = (w, extent)
    return CoverSolution(vertices=vertices, fractional=fractional, cost=cost, profit=profit)


def make_instance(n, edges, costs=None, *, budget, target, variant=None,
                  bipartite_required=False) -> WpvcInstance:
    """Build a validated instance; the variant tag is inferred when omitted."""
    from .graph import make_graph

    g = make_graph(n, edges, costs)
    if variant is None:
        variant = infer_variant(g)
    inst = WpvcInstance(g, budget, target, Variant(variant), bipartite_required)
    problems = validate(inst)
    if problems:
        raise InputError("; ".join(problems))
    return inst


def validate(inst: WpvcInstance) -> list[str]:
    """Check every instance invariant; returns violations instead of raising."""
    problems = check_graph(inst.graph)
    if not isinstance(inst.budget, int) or inst.budget < 0:
        problems.append("budget must be a non-negative integer")
    if not isinstance(inst.target, int) or inst.target < 0:
        problems.append("target must be a non-negative integer")
    if inst.variant in (Variant.EPVC, Variant.PVC):
        bad = [v for v, c in enumerate(inst.graph.costs) if c != 1]
        if bad:
            problems.append("variant/weight mismatch: variant %s requires unit costs "
                            "but vertex %d has cost %d"
                            % (inst.variant.value, bad[0], inst.graph.costs[bad[0]]))
    if inst.variant in (Variant.VPVC, Variant.PVC):
        bad = [e for e, (_, _, p) in enumerate(inst.graph.edges) if p != 1]
        if bad:
            problems.append("variant/weight mismatch: variant %s requires unit profits "
                            "but edge %d has profit %d"
                            % (inst.variant.value, bad[0], inst.graph.edges[bad[0]][2]))
    if inst.bipartite_required:
        bp = bipartition(inst.graph)
        if isinstance(bp, NotBipartite):
            problems.append("graph must be bipartite but contains odd cycle %s"
                            % (list(bp.odd_cycle),))
    return problems


def residual(inst: WpvcInstance, v: int) -> WpvcInstance:
    """The instance left after forcing ``v`` into the solution.

    ``v`` keeps its id but loses all incident edges; the budget drops by its
    cost and the target by its weighted degree (clamped at zero). Solving the
    residual with S is equivalent to solving ``inst`` with S plus v.
    """
    g = inst.graph
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InputError("invalid vertex id %r" % (v,))
    if g.costs[v] > inst.budget:
        raise InputError("vertex %d costs %d, which exceeds the remaining budget %d"
                         % (v, g.costs[v], inst.budget))
    gain = weighted_degree(g, v)
    drop = set(g.adjacency[v])
    kept = [g.edges[e] for e in range(g.m) if e not in drop]
    from .graph import make_graph

    return WpvcInstance(
        graph=make_graph(g.n, kept, g.costs),
        budget=inst.budget - g.costs[v],
        target=max(0, inst.target - gain),
        variant=inst.variant,
        bipartite_required=inst.bipartite_required,
    )


def is_trivial(inst: WpvcInstance):
    """Shared base cases: True (empty set suffices), False (infeasible), or None.

    A zero target is always feasible, even with a zero budget. A zero budget
    with a positive target is infeasible, as is a target beyond the total
    profit of all remaining edges. Callers must deal with zero-cost vertices
    before relying on the zero-budget rule; the branching solvers force such
    vertices into the solution first.
    """
    if inst.target == 0:
        return True
    if inst.budget == 0:
        return False
    if inst.graph.total_profit() < inst.target:
        return False
    return None


def prune_unaffordable(inst: WpvcInstance) -> WpvcInstance:
    """Drop edges whose endpoints are both too expensive to ever select.

    Vertices costing more than the budget keep their ids (so witnesses still
    line up with the input) but can never enter a solution; an edge between two
    of them is dead weight and is removed. Applied once at load time.
    """
    g = inst.graph
    dead = [g.costs[v] > inst.budget for v in range(g.n)]
    kept = [edge for edge in g.edges if not (dead[edge[0]] and dead[edge[1]])]
    if len(kept) == g.m:
        return inst
    from .graph import make_graph

    return WpvcInstance(
        graph=make_graph(g.n, kept, g.costs),
        budget=inst.budget,
        target=inst.target,
        variant=inst.variant,
        bipartite_required=inst.bipartite_required,
    )

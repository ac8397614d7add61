"""Immutable graphs with vertex costs and edge profits, plus the bipartite toolbox:
2-coloring, maximum matching (Hopcroft-Karp) and minimum vertex cover (Konig).

Everything is exact integer arithmetic. All tie-breaking is by lowest vertex id,
so repeated runs produce identical labelings, matchings and covers. Graphs are
frozen after construction; every operation here is read-only and safe to call
concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError

LEFT = 0
RIGHT = 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    ``edges[e] = (u, v, profit)`` with u < v; ``adjacency[v]`` holds the ids of
    the edges incident to v. Costs and profits are non-negative ints of
    arbitrary precision (gadget instances go far beyond 64 bits).
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    costs: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def profit(self, e: int) -> int:
        return self.edges[e][2]

    def other_end(self, e: int, v: int) -> int:
        u, w, _ = self.edges[e]
        return w if v == u else u

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(adj) for adj in self.adjacency), default=0)

    def total_profit(self) -> int:
        return sum(p for _, _, p in self.edges)

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.adjacency[v]]


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side labels (LEFT/RIGHT); every edge joins the two sides."""

    side: tuple[int, ...]

    def left(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == LEFT]

    def right(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == RIGHT]


@dataclass(frozen=True)
class NotBipartite:
    """Returned by :func:`bipartition` when the graph has an odd cycle."""

    odd_cycle: tuple[int, ...]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edge ids."""

    edge_ids: frozenset[int]
    size: int


def make_graph(n, edges, costs=None) -> Graph:
    """Build and validate a graph.

    ``edges`` items are (u, v) or (u, v, profit); profit defaults to 1. Costs
    default to 1 per vertex. Self-loops and parallel edges are rejected, as are
    negative weights.
    """
    if not isinstance(n, int) or n < 0:
        raise InputError("vertex count must be a non-negative integer")
    if costs is None:
        costs = (1,) * n
    else:
        costs = tuple(costs)
    if len(costs) != n:
        raise InputError("expected %d vertex costs, got %d" % (n, len(costs)))
    for v, c in enumerate(costs):
        if not isinstance(c, int) or c < 0:
            raise InputError("cost of vertex %d must be a non-negative integer" % v)
    norm = []
    seen_pairs = set()
    for item in edges:
        if len(item) == 2:
            u, v = item
            p = 1
        else:
            u, v, p = item
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InputError("edge endpoints must be integers: %r" % (item,))
        if not (0 <= u < n and 0 <= v < n):
            raise InputError("edge endpoint out of range: %r" % (item,))
        if u == v:
            raise InputError("self-loop at vertex %d" % u)
        if not isinstance(p, int) or p < 0:
            raise InputError("edge profit must be a non-negative integer: %r" % (item,))
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            raise InputError("parallel edge %s" % (key,))
        seen_pairs.add(key)
        norm.append((key[0], key[1], p))
    adjacency = [[] for _ in range(n)]
    for e, (u, v, _) in enumerate(norm):
        adjacency[u].append(e)
        adjacency[v].append(e)
    return Graph(
        n=n,
        edges=tuple(norm),
        costs=costs,
        adjacency=tuple(tuple(a) for a in adjacency),
    )


def check_graph(g: Graph) -> list[str]:
    """Re-check the structural invariants of an already-built graph."""
    problems = []
    if len(g.costs) != g.n or len(g.adjacency) != g.n:
        problems.append("per-vertex arrays do not match vertex count")
        return problems
    seen_pairs = set()
    for e, (u, v, p) in enumerate(g.edges):
        if not (0 <= u < g.n and 0 <= v < g.n):
            problems.append("edge %d has endpoint out of range" % e)
            continue
        if u == v:
            problems.append("edge %d is a self-loop" % e)
        if u > v:
            problems.append("edge %d is not normalized (u < v)" % e)
        if p < 0:
            problems.append("edge %d has negative profit" % e)
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            problems.append("parallel edge %s" % (key,))
        seen_pairs.add(key)
        if e not in g.adjacency[u] or e not in g.adjacency[v]:
            problems.append("edge %d missing from an endpoint adjacency list" % e)
    for v, c in enumerate(g.costs):
        if c < 0:
            problems.append("vertex %d has negative cost" % v)
    for v, adj in enumerate(g.adjacency):
        for e in adj:
            if not (0 <= e < g.m) or v not in g.edges[e][:2]:
                problems.append("adjacency of vertex %d lists foreign edge %r" % (v, e))
    return problems


def weighted_degree(g: Graph, v: int) -> int:
    """Total profit of the edges incident to ``v``."""
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InputError("invalid vertex id %r" % (v,))
    return sum(g.profit(e) for e in g.adjacency[v])


def weighted_degrees(g: Graph) -> list[int]:
    """Weighted degree of every vertex, in one pass over the edges."""
    out = [0] * g.n
    for u, v, p in g.edges:
        out[u] += p
        out[v] += p
    return out


def coverage(g: Graph, s) -> tuple[frozenset[int], int]:
    """Edges with at least one endpoint in ``s`` and their total profit.

    Each covered edge is counted exactly once, no matter how many of its
    endpoints are selected.
    """
    covered = set()
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InputError("invalid vertex id %r" % (v,))
        covered.update(g.adjacency[v])
    return frozenset(covered), sum(g.profit(e) for e in covered)


def bipartition(g: Graph):
    """Two-color the graph by BFS layering, processing vertices in id order.

    Returns a :class:`Bipartition`, or a :class:`NotBipartite` value carrying
    an odd cycle as witness. Deterministic: the same graph always yields the
    same labeling.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = LEFT
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.adjacency[v]:
                w = g.other_end(e, v)
                if side[w] == -1:
                    side[w] = RIGHT if side[v] == LEFT else LEFT
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    return NotBipartite(odd_cycle=_odd_cycle(parent, v, w))
    return Bipartition(side=tuple(side))


def _odd_cycle(parent, u, w):
    # Join the tree paths of the conflicting endpoints at their lowest
    # common ancestor; same BFS layer parity makes the cycle odd.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    while len(path_u) >= 2 and len(path_w) >= 2 and path_u[-2] == path_w[-2]:
        path_u.pop()
        path_w.pop()
    # path_u ends at the LCA, path_w repeats it; drop the duplicate.
    return tuple(path_u + path_w[-2::-1])


def _check_bipartition(g: Graph, bp: Bipartition) -> None:
    if len(bp.side) != g.n:
        raise InputError("bipartition does not match the graph's vertex count")
    for u, v, _ in g.edges:
        if bp.side[u] == bp.side[v]:
            raise InputError("bipartition is invalid: edge (%d, %d) stays on one side" % (u, v))


def max_matching(g: Graph, bp: Bipartition) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp.

    Left vertices are scanned in ascending id order and adjacency is sorted,
    so augmenting-path ties always resolve toward the lowest vertex id.
    """
    _check_bipartition(g, bp)
    left = [v for v in range(g.n) if bp.side[v] == LEFT]
    adj = {u: sorted(g.neighbors(u)) for u in left}
    pair = [-1] * g.n
    INF = g.n + 1
    dist = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if pair[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in adj[u]:
                if pair[w] == -1:
                    found = min(found, dist[u] + 1)
                elif dist[pair[w]] == INF:
                    dist[pair[w]] = dist[u] + 1
                    queue.append(pair[w])
        return found != INF

    def dfs(u: int) -> bool:
        for w in adj[u]:
            if pair[w] == -1 or (dist[pair[w]] == dist[u] + 1 and dfs(pair[w])):
                pair[u] = w
                pair[w] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in left:
            if pair[u] == -1 and dfs(u):
                size += 1

    index = {(u, v): e for e, (u, v, _) in enumerate(g.edges)}
    ids = set()
    for u in left:
        if pair[u] != -1:
            a, b = (u, pair[u]) if u < pair[u] else (pair[u], u)
            ids.add(index[(a, b)])
    assert len(ids) == size
    return Matching(edge_ids=frozenset(ids), size=size)


def min_vertex_cover(g: Graph, bp: Bipartition, matching: Matching) -> frozenset[int]:
    """Minimum vertex cover from a maximum matching (Konig's construction).

    Vertices reachable from unmatched left vertices by alternating paths are
    collected; the cover is the unreached left part plus the reached right
    part, and its size equals ``matching.size``. If the matching passed in is
    not maximum the result is not checked; that precondition is the caller's
    contract.
    """
    _check_bipartition(g, bp)
    mate = [-1] * g.n
    for e in matching.edge_ids:
        u, v, _ = g.edges[e]
        mate[u] = v
        mate[v] = u
    left = [v for v in range(g.n) if bp.side[v] == LEFT]
    reached = set(v for v in left if mate[v] == -1)
    queue = deque(sorted(reached))
    while queue:
        u = queue.popleft()
        for e in g.adjacency[u]:
            w = g.other_end(e, u)
            if w == mate[u] or w in reached:
                continue
            reached.add(w)
            if mate[w] != -1 and mate[w] not in reached:
                reached.add(mate[w])
                queue.append(mate[w])
    cover = [v for v in left if v not in reached]
    cover += [v for v in range(g.n) if bp.side[v] == RIGHT and v in reached]
    return frozenset(cover)


def edge_subgraph(g: Graph, edge_ids) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on a subset of edges, keeping the full vertex set.

    Returns the subgraph and, per subgraph edge id, the id of the original
    edge. Vertex ids are unchanged, so a bipartition of ``g`` stays valid.
    """
    kept = sorted(edge_ids)
    sub = make_graph(g.n, [g.edges[e] for e in kept], costs=g.costs)
    return sub, tuple(kept)

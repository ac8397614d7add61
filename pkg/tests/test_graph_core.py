import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_force_cover_number, brute_force_matching_size, c4, star
from pvckit import (Bipartition, InputError, NotBipartite, bipartition, coverage,
                    edge_subgraph, make_graph, max_matching, min_vertex_cover,
                    weighted_degree, weighted_degrees)


def small_graphs():
    """Hypothesis strategy for small graphs with weights."""
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=7))
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        picked = draw(st.lists(st.sampled_from(slots), unique=True, max_size=len(slots))
                      if slots else st.just([]))
        profits = draw(st.lists(st.integers(min_value=0, max_value=5),
                                min_size=len(picked), max_size=len(picked)))
        costs = draw(st.lists(st.integers(min_value=0, max_value=4),
                              min_size=n, max_size=n))
        edges = [(u, v, p) for (u, v), p in zip(picked, profits)]
        return make_graph(n, edges, costs)
    return build()


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            make_graph(2, [(0, 0)])

    def test_rejects_parallel_edges_either_orientation(self):
        with pytest.raises(InputError):
            make_graph(2, [(0, 1), (1, 0)])

    def test_rejects_negative_weights(self):
        with pytest.raises(InputError):
            make_graph(2, [(0, 1, -1)])
        with pytest.raises(InputError):
            make_graph(2, [], costs=[1, -2])

    def test_adjacency_lists_both_endpoints(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        assert g.adjacency == ((0,), (0, 1), (1,))


class TestWeightedDegree:
    def test_isolated_vertex_is_zero(self):
        g = make_graph(2, [])
        assert weighted_degree(g, 0) == 0

    def test_path_center(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        assert weighted_degree(g, 1) == 2

    def test_star_center_sums_profits(self):
        g = star((1, 2, 3))
        assert weighted_degree(g, 0) == 1 + 2 + 3

    def test_invalid_vertex(self):
        g = make_graph(2, [])
        with pytest.raises(InputError):
            weighted_degree(g, 5)

    def test_bulk_matches_single(self):
        g = star((1, 2, 3))
        assert weighted_degrees(g) == [weighted_degree(g, v) for v in range(g.n)]


class TestCoverage:
    def test_empty_selection(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        assert coverage(g, set()) == (frozenset(), 0)

    def test_path_center_covers_both(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        covered, profit = coverage(g, {1})
        assert covered == frozenset({0, 1}) and profit == 2

    def test_each_edge_counted_once(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        covered, profit = coverage(g, {0, 1})
        assert profit == 2 and covered == frozenset({0, 1})

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.data())
    def test_monotone_and_marginal_bound(self, g, data):
        smaller = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
        extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
        _, p_small = coverage(g, smaller)
        _, p_big = coverage(g, smaller | extra)
        assert p_small <= p_big
        v = data.draw(st.integers(0, g.n - 1))
        covered, base = coverage(g, smaller)
        _, with_v = coverage(g, smaller | {v})
        gain = with_v - base
        assert gain <= weighted_degree(g, v)
        # equality exactly when the already-covered edges at v carry no profit
        overlap = sum(g.profit(e) for e in g.adjacency[v] if e in covered)
        assert (gain == weighted_degree(g, v)) == (overlap == 0)


class TestBipartition:
    def test_single_edge(self):
        bp = bipartition(make_graph(2, [(0, 1)]))
        assert isinstance(bp, Bipartition)
        assert bp.side[0] != bp.side[1]

    def test_triangle_returns_odd_cycle(self):
        out = bipartition(make_graph(3, [(0, 1), (1, 2), (0, 2)]))
        assert isinstance(out, NotBipartite)
        assert len(out.odd_cycle) == 3
        assert set(out.odd_cycle) == {0, 1, 2}

    def test_c4_alternates(self):
        bp = bipartition(c4())
        assert isinstance(bp, Bipartition)
        assert sorted([len(bp.left()), len(bp.right())]) == [2, 2]
        for u, v, _ in c4().edges:
            assert bp.side[u] != bp.side[v]

    @settings(max_examples=60, deadline=None)
    @given(small_graphs())
    def test_deterministic_and_witness_valid(self, g):
        first = bipartition(g)
        second = bipartition(g)
        assert first == second
        if isinstance(first, Bipartition):
            for u, v, _ in g.edges:
                assert first.side[u] != first.side[v]
        else:
            cyc = first.odd_cycle
            assert len(cyc) % 2 == 1
            assert len(set(cyc)) == len(cyc)
            pairs = {(u, v) for u, v, _ in g.edges} | {(v, u) for u, v, _ in g.edges}
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert (a, b) in pairs


class TestMatchingAndCover:
    def test_empty_graph(self):
        g = make_graph(3, [])
        bp = bipartition(g)
        mat = max_matching(g, bp)
        assert mat.size == 0 and mat.edge_ids == frozenset()
        assert min_vertex_cover(g, bp, mat) == frozenset()

    def test_c4_perfect_matching(self):
        g = c4()
        bp = bipartition(g)
        mat = max_matching(g, bp)
        assert mat.size == 2 == brute_force_matching_size(g)
        cover = min_vertex_cover(g, bp, mat)
        assert len(cover) == 2
        assert all(u in cover or v in cover for u, v, _ in g.edges)

    def test_star_matches_once_covers_center(self):
        g = star((1, 1, 1))
        bp = bipartition(g)
        mat = max_matching(g, bp)
        assert mat.size == 1
        assert min_vertex_cover(g, bp, mat) == frozenset({0})

    def test_matching_edges_disjoint(self):
        g = c4()
        mat = max_matching(g, bipartition(g))
        seen = set()
        for e in mat.edge_ids:
            u, v, _ = g.edges[e]
            assert u not in seen and v not in seen
            seen.update((u, v))

    def test_konig_on_random_bipartite(self):
        import random
        for seed in range(120):
            rng = random.Random(seed)
            n = rng.randint(2, 10)
            left = rng.randint(1, n - 1)
            slots = [(i, j) for i in range(left) for j in range(left, n)]
            m = rng.randint(0, len(slots))
            g = make_graph(n, sorted(rng.sample(slots, m)))
            bp = bipartition(g)
            mat = max_matching(g, bp)
            assert mat.size == brute_force_matching_size(g)
            assert mat.size == brute_force_cover_number(g)
            cover = min_vertex_cover(g, bp, mat)
            assert len(cover) == mat.size
            assert all(u in cover or v in cover for u, v, _ in g.edges)


class TestEdgeSubgraph:
    def test_maps_edge_ids_back(self):
        g = c4()
        sub, back = edge_subgraph(g, {1, 3})
        assert sub.n == g.n and sub.m == 2
        assert [g.edges[b] for b in back] == list(sub.edges)

import math
import random

import pytest

import helpers
from graphsplines import (
    GraphDocumentError,
    TrailLimitError,
    completion,
    enumerate_trails,
    load_graph,
    permute_vertices,
    zero_trails,
)


class TestLoadGraph:
    def test_diamond_document(self, diamond):
        assert diamond.n == 4 and diamond.m == 5
        assert diamond.vertex_names == ("v1", "v2", "v3", "v4")
        assert [e.label for e in diamond.edges] == [5, 4, 6, 2, 9]

    def test_single_edge(self):
        g = helpers.make_graph("int", ["v1", "v2"], [("v1", "v2", 7)])
        assert g.n == 2 and g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(GraphDocumentError, match="self-loop"):
            helpers.make_graph("int", ["v1"], [("v1", "v1", 3)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphDocumentError, match="duplicate"):
            helpers.make_graph("int", ["v1", "v2"],
                               [("v1", "v2", 3), ("v2", "v1", 5)])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(GraphDocumentError, match="unknown vertex"):
            helpers.make_graph("int", ["v1", "v2"], [("v1", "v9", 3)])

    def test_zero_label_rejected(self):
        with pytest.raises(GraphDocumentError, match="zero label"):
            helpers.make_graph("int", ["v1", "v2"], [("v1", "v2", 0)])

    def test_domain_mismatch_rejected(self):
        with pytest.raises(GraphDocumentError):
            helpers.make_graph("int", ["v1", "v2"], [("v1", "v2", "x+1")])

    def test_unknown_domain_rejected(self):
        with pytest.raises(GraphDocumentError, match="unknown domain"):
            load_graph({"domain": "rational", "vertices": ["a"], "edges": []})

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(GraphDocumentError, match="distinct"):
            load_graph({"domain": "int", "vertices": ["a", "a"], "edges": []})


class TestCompletion:
    def test_diamond_completion(self, diamond):
        k = completion(diamond)
        assert k.is_complete and k.m == 6
        added = k.edges[5]
        assert (added.u, added.v) == (2, 3)
        assert added.label == 1
        assert k.edges[:5] == diamond.edges

    def test_fixed_point(self, k4):
        assert completion(k4) == k4

    def test_idempotent(self, diamond):
        once = completion(diamond)
        assert completion(once) == once

    def test_edgeless(self):
        g = helpers.make_graph("int", ["a", "b", "c"], [])
        k = completion(g)
        assert k.is_complete and all(e.label == 1 for e in k.edges)


class TestEnumerateTrails:
    def test_path_graph(self):
        g = helpers.make_graph("int", ["v1", "v2", "v3"],
                               [("v1", "v2", 2), ("v2", "v3", 3)])
        trails = enumerate_trails(g, 2, 0)
        assert [t.edges for t in trails] == [(1, 0)]
        assert trails[0].vertices == (2, 1, 0)

    def test_isolated_vertices(self):
        g = helpers.make_graph("int", ["a", "b"], [])
        assert enumerate_trails(g, 0, 1) == []

    def test_same_endpoints_rejected(self, diamond):
        with pytest.raises(ValueError):
            enumerate_trails(diamond, 1, 1)

    def test_k4_contains_listed_zero_trails(self, k4):
        found = {t.edges for t in enumerate_trails(k4, 1, 0)}
        # the five reduced zero trails are among all v2-to-v1 trails
        for seq in [(0,), (1, 2), (4, 3), (1, 5, 3), (4, 5, 2)]:
            assert seq in found

    def test_lexicographic_order(self, k4):
        trails = enumerate_trails(k4, 1, 0)
        assert [t.edges for t in trails] == sorted(t.edges for t in trails)

    def test_cap_aborts(self, k4):
        with pytest.raises(TrailLimitError):
            enumerate_trails(k4, 1, 0, max_trails=2)

    def test_counts_match_dp_oracle(self):
        rng = random.Random(7)
        for n in (3, 4, 5):
            g = helpers.random_complete_graph(rng, n)
            expected = helpers.count_trails_dp(g, 1, 0)
            assert len(enumerate_trails(g, 1, 0)) == expected

    def test_complete_graph_lower_bound(self):
        rng = random.Random(11)
        for n in (3, 4, 5, 6):
            g = helpers.random_complete_graph(rng, n)
            assert len(enumerate_trails(g, 0, n - 1)) >= math.factorial(n - 2)

    def test_trail_invariants(self, k4):
        for t in enumerate_trails(k4, 1, 0):
            assert len(t.edges) >= 1
            assert len(set(t.edges)) == len(t.edges)
            assert t.vertices[0] == 1 and t.vertices[-1] == 0
            for k, e in enumerate(t.edges):
                edge = k4.edges[e]
                assert {t.vertices[k], t.vertices[k + 1]} == {edge.u, edge.v}


class TestZeroTrails:
    def test_diamond_v2(self, diamond):
        trails = zero_trails(diamond, 1)
        assert [t.edges for t in trails] == [(0,), (3, 1), (4, 2)]
        assert [t.gcd for t in trails] == [5, 2, 3]

    def test_k4_v2_matches_listed(self, k4):
        assert [t.edges for t in zero_trails(k4, 1)] == \
            [(0,), (1, 2), (1, 5, 3), (4, 3), (4, 5, 2)]

    def test_star_center(self):
        g = helpers.make_graph("int", ["leaf", "center", "other"],
                               [("center", "leaf", 6), ("center", "other", 10)])
        trails = zero_trails(g, 1)
        assert [t.edges for t in trails] == [(0,)]

    def test_first_vertex_rejected(self, diamond):
        with pytest.raises(ValueError):
            zero_trails(diamond, 0)

    def test_antichain(self, k5):
        for i in range(1, k5.n):
            sets = [frozenset(t.edges) for t in zero_trails(k5, i)]
            assert len(set(sets)) == len(sets)
            for a in sets:
                for b in sets:
                    assert not a < b

    def test_matches_bruteforce_pruning(self):
        rng = random.Random(23)
        graphs = [helpers.diamond(), helpers.k4_distinct(), helpers.k5_distinct()]
        graphs += [helpers.random_connected_graph(rng, n) for n in (3, 4, 5, 5)]
        for g in graphs:
            for i in range(1, g.n):
                got = [t.edges for t in zero_trails(g, i)]
                assert got == helpers.brute_zero_trails(g, i)

    def test_top_vertex_only_zero_edges(self, k5):
        assert all(len(t.edges) == 1 for t in zero_trails(k5, k5.n - 1))


class TestPermuteVertices:
    def test_identity(self, diamond):
        assert permute_vertices(diamond, [0, 1, 2, 3]) == diamond

    def test_swap_relabels_edges(self, diamond):
        g = permute_vertices(diamond, [0, 1, 3, 2])
        # the label-2 edge v2-v3 now joins v2 and the vertex at position 3
        e = next(e for e in g.edges if e.label == 2)
        assert (e.u, e.v) == (1, 3)
        assert g.vertex_names == ("v1", "v2", "v4", "v3")

    def test_reverse_path(self):
        g = helpers.make_graph("int", ["a", "b", "c"],
                               [("a", "b", 2), ("b", "c", 3)])
        r = permute_vertices(g, [2, 1, 0])
        assert r.vertex_names == ("c", "b", "a")
        assert [(e.u, e.v, e.label) for e in r.edges] == [(1, 2, 2), (0, 1, 3)]

    def test_non_bijection_rejected(self, diamond):
        with pytest.raises(ValueError):
            permute_vertices(diamond, [0, 0, 1, 2])

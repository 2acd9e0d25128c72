from __future__ import annotations

import pytest
from hypothesis import given

from loopspectra import (
    DegreeClassification,
    SimpleGraph,
    classify_bidegreed,
    complete_graph,
    complete_multipartite,
    degree_summary,
    detect_regular_complete_multipartite,
    empty_graph,
    family,
    is_clique,
    is_connected,
    is_independent_set,
    make_looped,
    multipartite_parts,
    path_graph,
)

from conftest import looped_graphs, simple_graphs


class TestConstruction:
    def test_make_looped_sigma_zero_is_plain_graph(self):
        gs = make_looped(complete_graph(2), ())
        assert gs.m == 1 and gs.sigma == 0
        assert gs.degrees == (1, 1)

    def test_make_looped_single_loop_degrees(self):
        gs = make_looped(complete_graph(2), {0})
        assert gs.degrees == (3, 1)

    def test_make_looped_full_loops(self):
        gs = make_looped(complete_graph(3), range(3))
        assert gs.degrees == (4, 4, 4)
        assert gs.sigma == 3

    def test_loop_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            make_looped(complete_graph(2), {2})

    def test_edges_normalized_and_deduplicated(self):
        g = SimpleGraph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_self_pair_rejected(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_degree_summary(self):
        gs = make_looped(path_graph(3), {1})
        summary = degree_summary(gs)
        assert summary.degrees_base == (1, 2, 1)
        assert summary.degrees_looped == (1, 4, 1)
        assert summary.max_degree == 2 and summary.min_degree == 1
        assert summary.average_degree * 3 == 2 * 2


class TestFamilies:
    def test_kn_sigma_small(self):
        gs = family("kn_sigma", n=2, sigma=1)
        assert gs.n == 2 and gs.m == 1 and gs.loops == frozenset({0})

    def test_kn_sigma_extremes_match_other_families(self):
        assert family("kn_sigma", n=4, sigma=0) == make_looped(complete_graph(4), ())
        assert family("kn_sigma", n=4, sigma=4) == family("kn_hat", n=4)

    def test_k32_s(self):
        gs = family("k32_s")
        assert gs.n == 5 and gs.m == 6 and gs.sigma == 3
        # the loop set sits on the degree-2 side
        assert all(gs.base.degrees[v] == 2 for v in gs.loops)

    def test_kkxp(self):
        gs = family("kkxp", k=3, p=2)
        assert gs.n == 6 and set(gs.base.degrees) == {4}

    def test_edgeless_full_loop(self):
        gs = family("edgeless_full_loop", n=6)
        assert gs.m == 0 and gs.sigma == 6

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            family("petersen")

    def test_bad_params(self):
        with pytest.raises(ValueError):
            family("kn_sigma", n=2, sigma=5)
        with pytest.raises(ValueError):
            family("kn_sigma", n=2, sigma=1, extra=3)


class TestPredicates:
    def test_connectivity(self):
        assert is_connected(complete_graph(3))
        assert not is_connected(empty_graph(2))
        assert is_connected(path_graph(3))

    def test_independent_and_clique(self):
        k3 = complete_graph(3)
        assert not is_independent_set(k3, {0, 1})
        assert is_clique(k3, {0, 1})
        p3 = path_graph(3)
        assert is_independent_set(p3, {0, 2})
        # singletons and the empty set count as both
        for g in (k3, p3):
            assert is_independent_set(g, {1}) and is_clique(g, {1})
            assert is_independent_set(g, ()) and is_clique(g, ())

    def test_subset_checked(self):
        with pytest.raises(ValueError):
            is_clique(complete_graph(2), {5})


class TestClassification:
    def test_k32_s_is_aligned_semiregular(self):
        cls = classify_bidegreed(family("k32_s"))
        assert cls == DegreeClassification(
            regular=False, bidegreed=True, k=2, s_aligned=True, bipartite=True
        )

    def test_full_loop_regular_is_degenerate_aligned(self):
        cls = classify_bidegreed(family("kn_hat", n=4))
        assert cls.regular and cls.s_aligned and cls.k == 3

    def test_p3_with_middle_loop_not_aligned(self):
        # degrees (1,2,1); the loop sits on the degree-2 vertex, so the loop
        # set is not the degree-k class
        cls = classify_bidegreed(make_looped(path_graph(3), {1}))
        assert cls.bidegreed and cls.k == 1 and not cls.s_aligned

    def test_regular_with_partial_loops_not_aligned(self):
        cls = classify_bidegreed(make_looped(complete_graph(4), {0}))
        assert cls.regular and not cls.s_aligned


class TestMultipartite:
    def test_kkxp_detected(self):
        assert detect_regular_complete_multipartite(complete_multipartite([2, 2, 2])) == (3, 2)

    def test_complete_graph_detected_with_unit_parts(self):
        assert detect_regular_complete_multipartite(complete_graph(4)) == (4, 1)

    def test_path_not_multipartite(self):
        assert detect_regular_complete_multipartite(path_graph(4)) is None
        assert multipartite_parts(path_graph(4)) is None

    def test_unequal_parts(self):
        g = complete_multipartite([3, 2])
        assert multipartite_parts(g) == (2, 3)
        assert detect_regular_complete_multipartite(g) is None


@given(simple_graphs())
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.m


@given(simple_graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g


@given(looped_graphs())
def test_looped_trace_matches_sigma(gs):
    from loopspectra import adjacency

    assert int(adjacency(gs).trace()) == gs.sigma

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given

from loopspectra import (
    adjacency,
    complement,
    complete_graph,
    eig_sym,
    empty_graph,
    family,
    incidence,
    line_graph,
    make_looped,
    multiset_distance,
    ng_energy_aux_matrix,
    path_graph,
    quotient_2block,
    signless_laplacian,
)

from conftest import looped_graphs


def _loop_indicator(m: int, total: int) -> np.ndarray:
    d = np.zeros((total, total), dtype=np.int64)
    for i in range(m):
        d[i, i] = 1
    return d


class TestAdjacency:
    def test_k2_with_loop(self):
        a = adjacency(make_looped(complete_graph(2), {0}))
        assert a.tolist() == [[1, 1], [1, 0]]

    def test_k2_hat(self):
        a = adjacency(family("kn_hat", n=2))
        assert a.tolist() == [[1, 1], [1, 1]]

    def test_p3_plain(self):
        a = adjacency(make_looped(path_graph(3), ()))
        assert a.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
        assert a.trace() == 0


class TestComplement:
    def test_k3_with_loop(self):
        gs = make_looped(complete_graph(3), {0})
        comp = complement(gs)
        assert comp.m == 0 and comp.loops == frozenset({0})

    def test_k2_with_loop(self):
        comp = complement(make_looped(complete_graph(2), {0}))
        assert comp.base == empty_graph(2) and comp.loops == frozenset({0})

    def test_flip_convention(self):
        gs = make_looped(complete_graph(3), {0})
        flipped = complement(gs, flip_loop_set=True)
        assert flipped.loops == frozenset({1, 2})
        assert complement(flipped, flip_loop_set=True) == gs

    @given(looped_graphs())
    def test_involution(self, gs):
        assert complement(complement(gs)) == gs


class TestLineGraph:
    def test_k2_hat(self):
        lg = line_graph(family("kn_hat", n=2))
        assert adjacency(lg.graph).tolist() == [[0, 1, 1], [1, 1, 0], [1, 0, 1]]
        assert lg.edge_vertices == ((0, 1),)
        assert lg.loop_vertices == (0, 1)

    def test_p3_with_middle_loop(self):
        lg = line_graph(make_looped(path_graph(3), {1}))
        # vertices: e01, e12, loop at 1; the loop vertex touches both edges
        assert adjacency(lg.graph).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 1]]

    def test_sigma_zero_plain_line_graph(self):
        lg = line_graph(make_looped(complete_graph(3), ()))
        assert lg.graph.sigma == 0
        assert adjacency(lg.graph).trace() == 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            line_graph(make_looped(empty_graph(3), ()))

    @given(looped_graphs(max_n=6))
    def test_loop_vertices_independent_and_induced_subgraph(self, gs):
        if gs.m + gs.sigma == 0:
            return
        lg = line_graph(gs)
        a = adjacency(lg.graph) if lg.graph.n else None
        m = gs.m
        # loop-vertices: pairwise non-adjacent, each with a loop
        for i in range(m, gs.m + gs.sigma):
            assert a[i, i] == 1
            for j in range(m, gs.m + gs.sigma):
                if i != j:
                    assert a[i, j] == 0
        # induced subgraph on the first m vertices is the plain line graph
        if m:
            plain = adjacency(line_graph(make_looped(gs.base, ())).graph)
            assert np.array_equal(a[:m, :m], plain)


class TestIncidence:
    def test_k2_hat(self):
        b = incidence(family("kn_hat", n=2))
        assert b.tolist() == [[1, 1, 0], [1, 0, 1]]

    def test_k2_plain(self):
        assert incidence(make_looped(complete_graph(2), ())).tolist() == [[1], [1]]

    def test_p3_with_middle_loop(self):
        b = incidence(make_looped(path_graph(3), {1}))
        assert b.tolist() == [[1, 0, 0], [1, 1, 1], [0, 1, 0]]

    @given(looped_graphs(max_n=6))
    def test_gram_identities(self, gs):
        b = incidence(gs)
        assert np.array_equal(b @ b.T, signless_laplacian(gs))
        if gs.m + gs.sigma:
            gram = b.T @ b - 2 * _loop_indicator(gs.m, gs.m + gs.sigma)
            assert np.array_equal(gram, adjacency(line_graph(gs).graph))


def test_incidence_identity_exhaustive_loop_sets_on_random_bases():
    # all loop subsets over a few seeded bases up to n = 8
    rng = np.random.default_rng(42)
    for n in range(1, 9):
        mask = rng.random((n, n)) < 0.5
        base_edges = [(i, j) for i, j in combinations(range(n), 2) if mask[i, j]]
        from loopspectra import SimpleGraph

        base = SimpleGraph.from_edges(n, base_edges)
        for loop_mask in range(1 << n):
            gs = make_looped(base, (v for v in range(n) if loop_mask >> v & 1))
            b = incidence(gs)
            assert np.array_equal(b @ b.T, signless_laplacian(gs))
            if gs.m + gs.sigma:
                gram = b.T @ b - 2 * _loop_indicator(gs.m, gs.m + gs.sigma)
                assert np.array_equal(gram, adjacency(line_graph(gs).graph))


class TestSignlessLaplacian:
    def test_k2_with_loop(self):
        q = signless_laplacian(make_looped(complete_graph(2), {0}))
        assert q.tolist() == [[2, 1], [1, 1]]

    def test_k2_hat(self):
        q = signless_laplacian(family("kn_hat", n=2))
        assert q.tolist() == [[2, 1], [1, 2]]


class TestAuxMatrix:
    def test_n2_sigma1(self):
        mat = ng_energy_aux_matrix(2, 1)
        assert mat.tolist() == [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]

    def test_n2_sigma0_is_complete_graph_adjacency(self):
        mat = ng_energy_aux_matrix(2, 0)
        assert mat.tolist() == [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]

    def test_full_loops_diagonal_zero(self):
        mat = ng_energy_aux_matrix(3, 3)
        assert [mat[i, i] for i in range(3)] == [Fraction(0)] * 3
        assert mat[0, 1] == 1

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            ng_energy_aux_matrix(1, 0)
        with pytest.raises(ValueError):
            ng_energy_aux_matrix(4, 5)


class TestQuotient:
    def test_aux_matrix_matches_closed_form(self):
        q = quotient_2block(ng_energy_aux_matrix(4, 2), [0, 1])
        assert q.tolist() == [[Fraction(2), Fraction(2)], [Fraction(2), Fraction(0)]]

    def test_all_ones(self):
        j = np.ones((5, 5), dtype=np.int64)
        q = quotient_2block(j, [0, 1])
        assert q.tolist() == [[Fraction(2), Fraction(3)], [Fraction(2), Fraction(3)]]

    def test_identity(self):
        q = quotient_2block(np.eye(4, dtype=np.int64), [0, 2])
        assert q.tolist() == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]

    def test_non_equitable_rejected(self):
        a = adjacency(make_looped(path_graph(3), ()))
        with pytest.raises(ValueError):
            quotient_2block(a, [0])

    def test_empty_part_rejected(self):
        with pytest.raises(ValueError):
            quotient_2block(np.eye(3, dtype=np.int64), [])

    def test_quotient_spectrum_embeds(self):
        for n in range(2, 10):
            for sigma in range(1, n):
                mat = ng_energy_aux_matrix(n, sigma)
                q = quotient_2block(mat, range(sigma))
                qf = np.array([[float(x) for x in row] for row in q.tolist()])
                # the 2x2 quotient is not symmetric; use its characteristic roots
                tr, det = qf[0, 0] + qf[1, 1], qf[0, 0] * qf[1, 1] - qf[0, 1] * qf[1, 0]
                disc = max(tr * tr - 4 * det, 0.0)
                roots = sorted([(tr + disc**0.5) / 2, (tr - disc**0.5) / 2])
                full = eig_sym(mat).values
                for r in roots:
                    assert min(abs(r - x) for x in full) < 1e-9

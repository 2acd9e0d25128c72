from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopspectra import (
    QuadExt,
    SimpleGraph,
    adjacency,
    charpoly_exact,
    closed_form_Kn_sigma_spectrum,
    complete_graph,
    eig_sym,
    family,
    line_graph,
    make_looped,
    min_eigenvalue,
    multiset_distance,
    path_graph,
    poly_add,
    poly_compose_rational,
    poly_mul,
    poly_pow,
    spectral_radius,
    verify_linegraph_identity,
)
from loopspectra.numerics import (
    NumericIntegrityError,
    _charpoly_bigint,
    _charpoly_modular,
    poly_eval_float,
)

from conftest import simple_graphs

GOLDEN = math.sqrt(5.0)


class TestEigSym:
    def test_fibonacci_matrix(self):
        spec = eig_sym(np.array([[1, 1], [1, 0]]), verify=True)
        assert spec.values[0] == pytest.approx((1 + GOLDEN) / 2, abs=1e-12)
        assert spec.values[1] == pytest.approx((1 - GOLDEN) / 2, abs=1e-12)

    def test_k3(self):
        spec = eig_sym(adjacency(make_looped(complete_graph(3), ())))
        assert multiset_distance(spec.values, (2.0, -1.0, -1.0)) < 1e-9

    def test_identity(self):
        spec = eig_sym(np.eye(4))
        assert spec.values == (1.0, 1.0, 1.0, 1.0)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            eig_sym(np.array([[0, 1], [2, 0]]))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            eig_sym(np.zeros((0, 0)))

    def test_radius_and_min(self):
        a = adjacency(line_graph(family("kn_hat", n=2)).graph)
        assert min_eigenvalue(a) == pytest.approx(-1.0, abs=1e-9)
        assert spectral_radius(a) == pytest.approx(2.0, abs=1e-9)

    def test_radius_of_full_loop_complete(self):
        for n in range(1, 8):
            assert spectral_radius(adjacency(family("kn_hat", n=n))) == pytest.approx(n, abs=1e-9)

    def test_zero_matrix_radius(self):
        assert spectral_radius(np.zeros((3, 3))) == 0.0


class TestCharpoly:
    def test_k2(self):
        assert charpoly_exact(adjacency(make_looped(complete_graph(2), ()))) == (-1, 0, 1)

    def test_k2_hat(self):
        assert charpoly_exact(adjacency(family("kn_hat", n=2))) == (0, -2, 1)

    def test_line_of_k2_hat(self):
        got = charpoly_exact(adjacency(line_graph(family("kn_hat", n=2)).graph))
        assert got == (2, -1, -2, 1)  # (x-1)(x-2)(x+1)

    def test_bigint_equals_modular(self):
        rng = random.Random(11)
        for _ in range(150):
            n = rng.randint(1, 12)
            a = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    a[i][j] = a[j][i] = rng.randint(-4, 4)
            assert _charpoly_bigint(a) == _charpoly_modular(a)

    def test_newton_identities_and_root_residuals(self):
        rng = random.Random(5)
        for _ in range(30):
            n = rng.randint(1, 10)
            a = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    a[i][j] = a[j][i] = rng.randint(-2, 2)
            arr = np.array(a)
            poly = charpoly_exact(arr)
            assert poly[-1] == 1 and len(poly) == n + 1
            # power sums from coefficients: p1 = -c_{n-1}, p2 = c_{n-1}^2 - 2 c_{n-2}
            assert -poly[n - 1] == int(arr.trace())
            if n >= 2:
                assert poly[n - 1] ** 2 - 2 * poly[n - 2] == int((arr * arr).sum())
            scale = 1e-6 * sum(abs(c) for c in poly)
            for lam in eig_sym(arr).values:
                assert abs(poly_eval_float(poly, lam)) <= max(scale, 1e-6)

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError):
            charpoly_exact(np.array([[0.5, 0.0], [0.0, 0.5]]))


class TestPolyOps:
    def test_mul_example(self):
        assert poly_mul((-1, 1), (-2, -1, 1)) == (2, -1, -2, 1)

    def test_pow_zero(self):
        assert poly_pow((-1, 1), 0) == (1,)

    def test_add_cancels(self):
        assert poly_add((1, 2), (1, -2)) == (2,)

    def test_compose_identity_polynomial(self):
        assert poly_compose_rational((0, 1), (-2, -1, 1), (0, 1)) == (-2, -1, 1)

    def test_compose_clear_degree(self):
        # x composed with num/den, cleared to degree 2: den^2 * (num/den)
        assert poly_compose_rational((0, 1), (1, 1), (0, 1), clear_degree=2) == (0, 1, 1)

    def test_compose_rejects_zero_denominator(self):
        with pytest.raises(ValueError):
            poly_compose_rational((0, 1), (1,), (0,))


class TestLineGraphIdentity:
    def test_k2(self):
        chk = verify_linegraph_identity(complete_graph(2))
        assert chk.equal
        assert chk.lhs == (2, -1, -2, 1)
        assert chk.rhs == (2, -1, -2, 1)

    def test_k3_equal_exponents(self):
        chk = verify_linegraph_identity(complete_graph(3))
        assert chk.equal and chk.n == chk.m == 3

    def test_p3(self):
        assert verify_linegraph_identity(path_graph(3)).equal

    def test_more_edges_than_vertices(self):
        g = SimpleGraph.from_edges(4, combinations(range(4), 2))  # K4: m=6 > n=4
        assert verify_linegraph_identity(g).equal

    def test_disconnected_and_isolated_vertices(self):
        g = SimpleGraph.from_edges(3, [(0, 1)])  # K2 plus an isolated vertex
        assert verify_linegraph_identity(g).equal
        g2 = SimpleGraph.from_edges(5, [(0, 1), (2, 3)])
        assert verify_linegraph_identity(g2).equal

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            verify_linegraph_identity(SimpleGraph.from_edges(2))

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(max_n=6))
    def test_random_graphs(self, g):
        if g.m:
            assert verify_linegraph_identity(g).equal


class TestClosedFormKnSigma:
    def test_n3_sigma1(self):
        spec = closed_form_Kn_sigma_spectrum(3, 1)
        expected = (1 + math.sqrt(2), -1.0, 1 - math.sqrt(2))
        assert multiset_distance(spec.values, expected) < 1e-12

    def test_n3_sigma3(self):
        assert closed_form_Kn_sigma_spectrum(3, 3).values == (3.0, 0.0, 0.0)

    def test_n4_sigma0(self):
        assert closed_form_Kn_sigma_spectrum(4, 0).values == (3.0, -1.0, -1.0, -1.0)

    def test_descending(self):
        for n in range(1, 13):
            for sigma in range(n + 1):
                vals = closed_form_Kn_sigma_spectrum(n, sigma).values
                assert all(a >= b for a, b in zip(vals, vals[1:]))

    def test_matches_eigensolver(self):
        for n in range(1, 13):
            for sigma in range(n + 1):
                expected = closed_form_Kn_sigma_spectrum(n, sigma).values
                actual = eig_sym(adjacency(family("kn_sigma", n=n, sigma=sigma))).values
                assert multiset_distance(expected, actual) < 1e-9


class TestQuadExt:
    def test_perfect_square_folds(self):
        x = QuadExt(16, Fraction(1), Fraction(1, 2))
        assert x.d == 0 and x.a == 3 and x.b == 0

    def test_sign_mixed(self):
        assert QuadExt(2, Fraction(3), Fraction(-2)).sign() == 1
        assert QuadExt(2, Fraction(1), Fraction(-1)).sign() == -1
        assert QuadExt(2, Fraction(-3), Fraction(2)).sign() == -1
        assert QuadExt(2, Fraction(-1), Fraction(1)).sign() == 1

    def test_abs_and_float(self):
        x = QuadExt(2, Fraction(0), Fraction(-1))
        assert float(abs(x)) == pytest.approx(math.sqrt(2))

    @given(
        st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 30),
    )
    def test_sign_matches_float(self, a, b, d):
        x = QuadExt(d, Fraction(a), Fraction(b))
        value = a + b * math.sqrt(d)
        if abs(value) > 1e-9:
            assert x.sign() == (1 if value > 0 else -1)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(2, Fraction(1), Fraction(1)) + QuadExt(3, Fraction(1), Fraction(1))

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distinertia.congruence import ElementaryStep, NormalForm, elementary_congruence
from distinertia.distance import distance_matrix
from distinertia.errors import NotSymmetricError, SingularBlockError, TheoremViolation
from distinertia.exact import determinant
from distinertia.fuzz import FuzzConfig, random_graph
from distinertia.inertia import (
    EigenResult,
    Inertia,
    arrowhead_inertia,
    check_interlacing,
    exact_inertia,
    float_eigenvalues,
    float_inertia,
    relative_threshold,
    schur_determinant,
)

from conftest import graph
from oracles import charpoly_inertia, leibniz_det

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def symmetric_matrices(draw, min_n=1, max_n=6, elements=rationals):
    n = draw(st.integers(min_n, max_n))
    upper = {(i, j): draw(elements) for i in range(n) for j in range(i, n)}
    return tuple(tuple(upper[min(i, j), max(i, j)] for j in range(n)) for i in range(n))


class TestExactInertia:
    def test_hollow_pair(self):
        w = Fraction(7, 3)
        assert exact_inertia([[0, w], [w, 0]]) == Inertia(1, 0, 1)

    def test_unit_triangle(self, unit_triangle):
        assert exact_inertia(distance_matrix(unit_triangle).entries) == Inertia(1, 0, 2)

    def test_unit_c4(self, unit_c4):
        assert exact_inertia(distance_matrix(unit_c4).entries) == Inertia(1, 1, 2)

    def test_zero_matrix(self):
        assert exact_inertia([[0] * 3] * 3) == Inertia(0, 3, 0)

    def test_empty(self):
        assert exact_inertia(()) == Inertia(0, 0, 0)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(NotSymmetricError):
            exact_inertia([[0, 1], [2, 0]])

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            exact_inertia([[0.0, 1.0], [1.0, 0.0]])

    @settings(max_examples=200, deadline=None)
    @given(symmetric_matrices(max_n=4))
    def test_matches_charpoly_signs(self, m):
        assert exact_inertia(m).as_tuple() == charpoly_inertia(m)

    @settings(max_examples=100, deadline=None)
    @given(symmetric_matrices(max_n=4, elements=st.sampled_from([Fraction(0), Fraction(1), Fraction(-1)])))
    def test_matches_charpoly_on_degenerate(self, m):
        # small entry alphabet gives lots of singular and hollow blocks
        assert exact_inertia(m).as_tuple() == charpoly_inertia(m)

    @settings(max_examples=60, deadline=None)
    @given(symmetric_matrices(min_n=2, max_n=7), st.lists(st.tuples(st.integers(1, 7), st.integers(1, 7)), max_size=12))
    def test_congruence_invariance(self, m, pairs):
        n = len(m)
        out = m
        for i, j in pairs:
            i, j = (i - 1) % n + 1, (j - 1) % n + 1
            if i != j:
                out = elementary_congruence(out, ElementaryStep(i, j))
        assert exact_inertia(out) == exact_inertia(m)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["tree", "unicyclic3", "unicyclic-even", "unweighted-unicyclic"]), st.integers(0, 2**32))
def test_distance_matrices_have_a_positive_eigenvalue(family, seed):
    d = distance_matrix(random_graph(FuzzConfig(family, (3, 15), 1, seed), 0))
    assert exact_inertia(d.entries).plus >= 1


class TestArrowhead:
    def test_path_form(self):
        assert arrowhead_inertia(NormalForm((Fraction(1), Fraction(1)))) == Inertia(1, 0, 2)

    def test_single_edge(self):
        assert arrowhead_inertia(NormalForm((Fraction(4),))) == Inertia(1, 0, 1)

    def test_triangle_form(self):
        assert arrowhead_inertia(NormalForm((Fraction(1), Fraction(1)), Fraction(-1))) == Inertia(1, 0, 2)

    def test_rejects_bad_coupling(self):
        with pytest.raises(ValueError, match="coupling"):
            arrowhead_inertia(NormalForm((Fraction(1), Fraction(1)), Fraction(-2)))

    def test_rejects_nonpositive_border(self):
        with pytest.raises(ValueError):
            arrowhead_inertia(NormalForm((Fraction(1), Fraction(0))))

    def test_mismatch_is_a_hard_error(self, monkeypatch):
        import distinertia.inertia as mod

        monkeypatch.setattr(mod, "exact_inertia", lambda m: Inertia(2, 0, 1))
        with pytest.raises(TheoremViolation):
            mod.arrowhead_inertia(NormalForm((Fraction(1), Fraction(1))))

    def test_leading_block_signs(self):
        # [[0, d], [d, -2d]] has eigenvalues (-1 +- sqrt 2) d: one of each sign
        d = Fraction(3, 2)
        assert exact_inertia([[0, d], [d, -2 * d]]) == Inertia(1, 0, 1)
        lam = float_eigenvalues([[0, d], [d, -2 * d]]).eigenvalues
        assert lam == pytest.approx([(-1 - 2 ** 0.5) * 1.5, (-1 + 2 ** 0.5) * 1.5])


class TestSchur:
    def test_two_by_two(self):
        assert schur_determinant([[1, 2], [3, 4]], 1) == -2

    def test_block_diagonal(self):
        m = [[2, 1, 0, 0], [1, 3, 0, 0], [0, 0, 5, 2], [0, 0, 2, 1]]
        assert schur_determinant(m, 2) == 5 * 1

    def test_singular_leading_block(self):
        nf = NormalForm((Fraction(1), Fraction(1)), Fraction(-1))
        with pytest.raises(SingularBlockError):
            schur_determinant(nf.matrix(), 1)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_matches_permutation_expansion(self, data):
        n = data.draw(st.integers(2, 5))
        m = [[data.draw(rationals) for _ in range(n)] for _ in range(n)]
        split = data.draw(st.integers(1, n))
        expected = leibniz_det(m)
        assert determinant(m) == expected
        if leibniz_det([row[:split] for row in m[:split]]) != 0:
            assert schur_determinant(m, split) == expected


class TestFloatEigenvalues:
    def test_unit_triangle(self, unit_triangle):
        e = float_eigenvalues(distance_matrix(unit_triangle).entries)
        assert e.eigenvalues == pytest.approx([-1, -1, 2], abs=1e-12)

    def test_weighted_c4(self):
        g = graph(4, (1, 2, 2), (2, 3, 1), (3, 4, 2), (4, 1, 1))
        e = float_eigenvalues(distance_matrix(g).entries)
        assert e.eigenvalues == pytest.approx([-4, -2, 0, 6], abs=1e-12)

    def test_diagonal(self):
        e = float_eigenvalues(np.diag([3.0, -1.0, 2.0]))
        assert e.eigenvalues == (-1.0, 2.0, 3.0)
        assert e.sweeps == 0

    def test_rejects_nonsymmetric(self):
        with pytest.raises(NotSymmetricError):
            float_eigenvalues(np.array([[0.0, 1.0], [2.0, 0.0]]))

    @pytest.mark.parametrize("backend", ["numba", "numpy"])
    def test_matches_lapack(self, backend):
        rng = np.random.default_rng(3)
        a = rng.normal(size=(25, 25))
        a = a + a.T
        e = float_eigenvalues(a, backend=backend)
        np.testing.assert_allclose(e.eigenvalues, np.linalg.eigvalsh(a), atol=1e-11)
        assert e.residual_bound < 1e-11


class TestFloatInertia:
    def test_c4_weights(self):
        lam = (-4.0, -2.0, 1e-15, 6.0)
        assert float_inertia(EigenResult(lam, 0.0), 1e-9 * 4 * 3) == Inertia(1, 1, 2)

    def test_triangle(self):
        assert float_inertia(EigenResult((2.0, -1.0, -1.0), 0.0), 1e-9) == Inertia(1, 0, 2)

    def test_all_small(self):
        assert float_inertia(EigenResult((1e-12, -1e-12, 0.0), 0.0), 1e-9) == Inertia(0, 3, 0)

    def test_threshold_must_be_positive(self):
        with pytest.raises(ValueError):
            float_inertia(EigenResult((1.0,), 0.0), 0.0)

    def test_relative_threshold(self, unit_c4):
        assert relative_threshold(distance_matrix(unit_c4).entries) == pytest.approx(1e-9 * 4 * 2)


class TestInterlacing:
    def test_triangle_edge(self):
        assert check_interlacing([-1, -1, 2], [-1, 1], 1e-12)

    def test_outside(self):
        assert not check_interlacing([-1, 0, 1], [5, 6], 1e-12)

    @pytest.mark.parametrize("drop", range(4))
    def test_deleted_entry(self, drop):
        alpha = [-3.0, -1.0, 0.5, 4.0]
        assert check_interlacing(alpha, alpha[:drop] + alpha[drop + 1:], 0.0)

    def test_longer_sub_rejected(self):
        with pytest.raises(ValueError):
            check_interlacing([1.0], [1.0, 2.0], 0.0)

    @settings(max_examples=60, deadline=None)
    @given(symmetric_matrices(min_n=2, max_n=9), st.data())
    def test_random_principal_submatrices(self, m, data):
        n = len(m)
        idx = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1)))
        sub = tuple(tuple(m[i][j] for j in idx) for i in idx)
        norm = float(max(sum(abs(x) for x in row) for row in m)) or 1.0
        assert check_interlacing(
            float_eigenvalues(m).eigenvalues, float_eigenvalues(sub).eigenvalues, 1e-8 * norm
        )


@settings(max_examples=60, deadline=None)
@given(symmetric_matrices(min_n=2, max_n=8, elements=st.fractions(0, 10, max_denominator=5)))
def test_perron_sign_property(m):
    n = len(m)
    hollow = tuple(tuple(Fraction(0) if i == j else m[i][j] for j in range(n)) for i in range(n))
    if all(x == 0 for row in hollow for x in row):
        return
    lam = float_eigenvalues(hollow).eigenvalues
    assert lam[-1] >= abs(lam[0]) - 1e-9 * float(max(max(r) for r in hollow))

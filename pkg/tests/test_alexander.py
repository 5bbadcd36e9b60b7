import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from braidwidth import BraidError, BraidWord, components, verify_t2_reduction
from braidwidth.alexander import (
    PolyMatrix,
    alexander_closure,
    alexander_torus,
    burau_generator,
    reduced_burau,
)
from braidwidth.laurent import LaurentPoly
from braidwidth.word import torus_word

import _oracles
from test_word import words


def coeffs(*cs):
    return LaurentPoly.from_coefficients(cs)


def _sympy_gen(n, k, t):
    g = sympy.eye(n - 1)
    g[k, k] = -t
    if k > 0:
        g[k - 1, k] = t
    if k < n - 2:
        g[k + 1, k] = 1
    return g


def sympy_burau_det(word):
    """det(I - B) computed independently with sympy matrices."""
    t = sympy.Symbol("t")
    n = word.strands
    mat = sympy.eye(n - 1)
    for x in word.letters:
        g = _sympy_gen(n, abs(x) - 1, t)
        mat = mat * (g if x > 0 else g.inv())
    return sympy.simplify((sympy.eye(n - 1) - mat).det())


def to_sympy(p):
    t = sympy.Symbol("t")
    return sum(c * t ** e for e, c in p.terms.items())


class TestBurau:
    def test_identity(self):
        assert reduced_burau(BraidWord(3, ())) == PolyMatrix.identity(2)
        assert reduced_burau(BraidWord(2, (1, -1))) == PolyMatrix.identity(1)

    def test_inverse_generators(self):
        for n in (3, 4, 5):
            for i in range(1, n):
                assert burau_generator(n, i) @ burau_generator(n, -i) == PolyMatrix.identity(n - 1)

    def test_braid_relation(self):
        assert reduced_burau(BraidWord(3, (1, 2, 1))) == reduced_burau(BraidWord(3, (2, 1, 2)))
        assert reduced_burau(BraidWord(4, (1, 3))) == reduced_burau(BraidWord(4, (3, 1)))

    def test_needs_two_strands(self):
        with pytest.raises(BraidError):
            reduced_burau(BraidWord(1, ()))

    def test_determinant_matches_sympy(self):
        rng = random.Random(3)
        t = sympy.Symbol("t")
        for _ in range(12):
            n = rng.randint(2, 4)
            w = BraidWord(n, _oracles.random_signed(rng, n, rng.randint(0, 6)))
            ours = (PolyMatrix.identity(n - 1) - reduced_burau(w)).det()
            assert sympy.expand(to_sympy(ours) - sympy_burau_det(w)) == 0, w


class TestClosure:
    def test_trefoil(self):
        assert alexander_closure(BraidWord(2, (1, 1, 1))) == coeffs(1, -1, 1)

    def test_cinquefoil(self):
        assert alexander_closure(BraidWord(2, (1,) * 5)) == coeffs(1, -1, 1, -1, 1)

    def test_unknot(self):
        assert alexander_closure(BraidWord(2, (1,))) == coeffs(1)
        assert alexander_closure(BraidWord(1, ())) == coeffs(1)

    def test_figure_eight(self):
        assert alexander_closure(BraidWord(3, (1, -2, 1, -2))) == coeffs(1, -3, 1)

    def test_torus_6_7(self):
        assert alexander_closure(torus_word(6, 7)) == alexander_torus(6, 7)

    @pytest.mark.parametrize("k", range(1, 13))
    def test_two_braids(self, k):
        assert alexander_closure(BraidWord(2, (1,) * (2 * k + 1))) == alexander_torus(2, 2 * k + 1)

    @settings(max_examples=40)
    @given(words(max_strands=4, max_len=8), st.integers(0, 10))
    def test_conjugation_invariance(self, w, k):
        assert alexander_closure(w.rotate(k)) == alexander_closure(w)

    @settings(max_examples=40)
    @given(words(max_strands=4, max_len=8), st.sampled_from((1, -1)))
    def test_stabilization_invariance(self, w, sign):
        n = w.strands
        stab = BraidWord(n + 1, w.letters + (sign * n,))
        assert alexander_closure(stab) == alexander_closure(w)

    @settings(max_examples=40)
    @given(words(max_strands=4, max_len=9))
    def test_knots_evaluate_to_one(self, w):
        if components(w) == 1:
            assert abs(alexander_closure(w)(1)) == 1


class TestTorus:
    def test_trefoil(self):
        assert alexander_torus(2, 3) == coeffs(1, -1, 1)

    def test_t29(self):
        p = alexander_torus(2, 9)
        assert p.coefficients() == [(-1) ** j for j in range(9)]

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 9), (3, 4), (3, 5), (4, 5), (6, 7), (6, 11), (5, 7)])
    def test_palindromic(self, p, q):
        c = alexander_torus(p, q).coefficients()
        assert c == c[::-1]
        assert len(c) - 1 == (p - 1) * (q - 1)
        assert alexander_torus(p, q)(1) == 1

    @pytest.mark.parametrize("p,q", [(3, 4), (3, 5), (4, 5), (2, 7)])
    def test_matches_closure(self, p, q):
        assert alexander_closure(torus_word(p, q)) == alexander_torus(p, q)

    def test_errors(self):
        with pytest.raises(BraidError):
            alexander_torus(2, 4)
        with pytest.raises(BraidError):
            alexander_torus(0, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_t2_reduction(n):
    assert verify_t2_reduction(n)

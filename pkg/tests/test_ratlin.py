from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from holotype.ratlin import (
    Mat,
    Subspace,
    cayley_orthogonal,
    nullspace,
    rat,
    rat_to_str,
    rref,
    span,
    subspace_contains,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
    unit_vector,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(rationals, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def antisymmetric(n):
    return st.lists(rationals, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda xs: _antisym(n, xs)
    )


def _antisym(n, xs):
    m = [[Fraction(0)] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = next(it)
            m[j][i] = -m[i][j]
    return Mat(m)


def e(n, i):
    return unit_vector(n, i)


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat("3/6") == Fraction(1, 2)
    assert rat_to_str(Fraction(-4, 2)) == "-2"
    assert rat_to_str(Fraction(3, 9)) == "1/3"


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[2, 4], [1, 2]], [[1, 2], [0, 0]]),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        ([[0, 1], [1, 0]], [[1, 0], [0, 1]]),
    ],
)
def test_rref_examples(m, expected):
    assert rref(Mat(m)) == Mat(expected)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy_and_is_idempotent(rows):
    m = Mat(rows)
    r = rref(m)
    assert rref(r) == r
    oracle, _ = sympy.Matrix(rows).rref()
    assert r.to_strings() == [[str(x) for x in row] for row in oracle.tolist()]


def test_span_examples():
    assert span([], 4).dim == 0
    s = span([e(4, 0), e(4, 2), tuple(a + b for a, b in zip(e(4, 0), e(4, 2)))], 4)
    assert s.dim == 2
    assert s.basis == Mat([e(4, 0), e(4, 2)])
    with pytest.raises(ValueError):
        span([e(4, 0), e(3, 0)], 4)


@settings(max_examples=60, deadline=None)
@given(matrices(cols=st.just(4)), st.randoms(use_true_random=False))
def test_span_is_order_insensitive(rows, r):
    shuffled = list(rows)
    r.shuffle(shuffled)
    assert span(rows, 4) == span(shuffled, 4)


def test_sum_contains_leq():
    a, b = span([e(3, 0)], 3), span([e(3, 1)], 3)
    assert subspace_sum(a, b) == span([e(3, 0), e(3, 1)], 3)
    assert not subspace_contains(span([(1, 1, 0)], 3), e(3, 0))
    assert subspace_leq(Subspace.zero(3), a)
    assert subspace_leq(a, Subspace.full(3))
    with pytest.raises(ValueError):
        subspace_sum(a, Subspace.zero(4))


@settings(max_examples=80, deadline=None)
@given(matrices(cols=st.just(4)), matrices(cols=st.just(4)))
def test_grassmann_identity(ra, rb):
    a, b = span(ra, 4), span(rb, 4)
    meet = subspace_intersection(a, b)
    assert subspace_sum(a, b).dim + meet.dim == a.dim + b.dim
    assert subspace_leq(meet, a) and subspace_leq(meet, b)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_matches_rank(rows):
    m = Mat(rows)
    ker = nullspace(m)
    assert len(ker) == m.ncols - m.rank()
    for v in ker:
        assert not any(m.apply(v))


def test_det_and_inverse_against_sympy():
    rows = [[2, -1, 0], [Fraction(1, 3), 4, 5], [0, 7, Fraction(-2, 9)]]
    m = Mat(rows)
    sm = sympy.Matrix([[sympy.Rational(str(x)) for x in r] for r in m.to_strings()])
    assert str(m.det()) == str(sm.det())
    assert m @ m.inverse() == Mat.identity(3)
    with pytest.raises(ZeroDivisionError):
        Mat([[1, 2], [2, 4]]).inverse()


def test_cayley_zero_is_identity():
    assert cayley_orthogonal(Mat.zeros(3, 3)) == Mat.identity(3)


def test_cayley_2x2_against_sympy():
    s = Mat([[0, 1], [-1, 0]])
    q = cayley_orthogonal(s)
    S = sympy.Matrix([[0, 1], [-1, 0]])
    oracle = (sympy.eye(2) - S) * (sympy.eye(2) + S).inv()
    assert q.to_strings() == [[str(x) for x in r] for r in oracle.tolist()]
    assert q == Mat([[0, -1], [1, 0]])
    assert q.T @ q == Mat.identity(2)


def test_cayley_rejects_non_antisymmetric():
    with pytest.raises(ValueError):
        cayley_orthogonal(Mat([[1, 0], [0, 0]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(antisymmetric))
def test_cayley_is_orthogonal(s):
    q = cayley_orthogonal(s)
    assert q.T @ q == Mat.identity(s.nrows)


def test_mat_shapes():
    m = Mat([[1, 2, 3]])
    assert m.T.shape == (3, 1)
    with pytest.raises(ValueError):
        Mat([[1, 2], [3]])
    with pytest.raises(ValueError):
        m @ m

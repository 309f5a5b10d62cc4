import itertools
import json
import random

import pytest
import sympy

from holotype import lie
from holotype.ratlin import Mat, span, subspace_sum, unit_vector

from conftest import random_algebra


def dense_jacobi_ok(L):
    """Literal four-index check of antisymmetry and the Jacobi identity."""
    d = L.dim
    c = L.structure_constant
    r = range(d)
    for i, j, k in itertools.product(r, r, r):
        if c(i, j, k) != -c(j, i, k):
            return False
    for i, j, k, l in itertools.product(r, r, r, r):
        s = sum(c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l) for m in r)
        if s:
            return False
    return True


def e(n, i):
    return unit_vector(n, i)


def test_thurston_n1_bracket():
    L = lie.thurston(1)
    assert L.dim == 4
    assert lie.bracket(L, e(4, 0), e(4, 1)) == e(4, 2)
    for i, j in itertools.combinations(range(4), 2):
        if (i, j) != (0, 1):
            assert not any(lie.bracket(L, e(4, i), e(4, j)))


def test_bracket_self_is_zero(rng):
    for _ in range(10):
        L = random_algebra(rng)
        x = tuple(rng.randint(-3, 3) for _ in range(L.dim))
        assert not any(lie.bracket(L, x, x))


def test_milnor_brackets():
    L = lie.milnor(4)
    for i in range(3):
        assert lie.bracket(L, e(4, i), e(4, 3)) == e(4, i)
    assert lie.commutator_ideal(L) == span([e(4, 0), e(4, 1), e(4, 2)], 4)
    with pytest.raises(ValueError):
        lie.milnor(5)


def test_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        lie.bracket(lie.thurston(1), e(3, 0), e(4, 0))


@pytest.mark.parametrize(
    "L",
    [lie.abelian(6), lie.thurston(3), lie.milnor(6), lie.gen_heisenberg(2, 2), lie.heisenberg_product([(1, 1), (2, 1)])],
    ids=["abelian6", "thurston3", "milnor6", "heis22", "product"],
)
def test_constructors_validate_against_dense_oracle(L):
    assert lie.validate(L)
    assert dense_jacobi_ok(L)


def test_validate_flags_broken_antisymmetry():
    L = lie.LieAlgebra(3, {(0, 1): {2: 1}})
    assert not lie.validate(L)
    assert lie.first_violation(L) == lie.Violation("antisymmetry", (1, 2, 3))


def test_validate_flags_jacobi_and_agrees_with_oracle(rng):
    bad = lie.LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    assert lie.first_violation(bad).kind == "jacobi"
    assert not dense_jacobi_ok(bad)
    for _ in range(30):
        d = 3
        table = {
            (i, j): {k: rng.randint(-1, 1) for k in range(d)}
            for i, j in itertools.combinations(range(d), 2)
        }
        L = lie.LieAlgebra.from_brackets(d, table)
        assert lie.validate(L) == dense_jacobi_ok(L)


def test_commutator_ideals():
    assert lie.commutator_ideal(lie.abelian(5)).dim == 0
    for n in range(1, 5):
        d = 2 * n + 2
        assert lie.commutator_ideal(lie.thurston(n)) == span([e(d, n + 1 + i) for i in range(n)], d)
    assert lie.commutator_ideal(lie.thurston(3)) == span([e(8, 4), e(8, 5), e(8, 6)], 8)


def test_thurston_is_two_step_and_central_last_vector():
    for n in range(1, 5):
        L = lie.thurston(n)
        assert lie.is_two_step_nilpotent(L)
        last = e(L.dim, L.dim - 1)
        assert all(not any(lie.bracket(L, last, e(L.dim, i))) for i in range(L.dim))
        assert 2 * lie.commutator_ideal(L).dim < L.dim
    assert not lie.is_two_step_nilpotent(lie.milnor(4))
    with pytest.raises(ValueError):
        lie.thurston(0)


def _heisenberg_matrix_basis(q, p):
    """Basis of the matrix Lie algebra of H(q, p) in the documented order."""
    size = p + 2 * q
    def unit(r, c):
        m = sympy.zeros(size, size)
        m[r, c] = 1
        return m
    A = [unit(a, p + b) for a in range(p) for b in range(q)]
    B = [unit(a, p + q + b) for a in range(p) for b in range(q)]
    C = [unit(p + b, p + q + b) for b in range(q)]
    return A + B + C


@pytest.mark.parametrize("q,p", [(1, 1), (2, 1), (1, 2), (2, 3)])
def test_gen_heisenberg_matches_matrix_commutators(q, p):
    basis = _heisenberg_matrix_basis(q, p)
    L = lie.gen_heisenberg(q, p)
    flat = sympy.Matrix([[x for x in m] for m in basis]).T
    for i, j in itertools.combinations(range(L.dim), 2):
        comm = basis[i] * basis[j] - basis[j] * basis[i]
        coords = flat.solve_least_squares(sympy.Matrix(list(comm))) if any(comm) else sympy.zeros(L.dim, 1)
        assert [str(x) for x in coords] == [str(x) for x in L.basis_bracket(i, j)]


def test_gen_heisenberg_examples():
    h = lie.gen_heisenberg(1, 1)
    assert h.dim == 3 and len(h.table) == 2
    h = lie.gen_heisenberg(2, 3)
    assert h.dim == 14 and lie.commutator_ideal(h).dim == 6
    assert lie.gen_heisenberg(3, 0) == lie.abelian(3)
    with pytest.raises(ValueError):
        lie.gen_heisenberg(0, 1)


def test_direct_sum():
    assert lie.direct_sum(lie.abelian(2), lie.abelian(2)) == lie.abelian(4)
    W = lie.direct_sum(lie.gen_heisenberg(1, 1), lie.gen_heisenberg(1, 1))
    assert W.dim == 6 and lie.commutator_ideal(W).dim == 2
    A, B = lie.thurston(1), lie.milnor(4)
    S = lie.direct_sum(A, B)
    pad = lambda v, left: (0,) * left + tuple(v) + (0,) * (8 - left - len(v))
    blocks = subspace_sum(
        span([pad(v, 0) for v in lie.commutator_ideal(A).vectors], 8),
        span([pad(v, 4) for v in lie.commutator_ideal(B).vectors], 8),
    )
    assert lie.commutator_ideal(S) == blocks


@pytest.mark.parametrize("factors", [[(1, 1), (1, 1)], [(2, 1)], [(1, 2), (1, 1)], [(2, 2)], [(1, 1), (1, 3), (2, 1)]])
def test_product_inequality(factors):
    W = lie.heisenberg_product(factors)
    assert sum(q for q, _ in factors) % 2 == 0
    assert lie.commutator_ideal(W).dim == sum(q * p for q, p in factors)
    assert W.dim >= 2 * lie.commutator_ideal(W).dim + 2


def test_json_round_trip():
    L = lie.thurston(2)
    doc = json.loads(json.dumps(lie.to_json(L)))
    assert lie.from_json(doc) == L
    assert doc["brackets"][0] == {"i": 1, "j": 3, "coeffs": {"4": "1"}}


def test_from_json_reports_jacobi_indices():
    doc = {
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 1, "j": 3, "coeffs": {"1": "1"}},
        ],
    }
    with pytest.raises(lie.InvalidLieAlgebra, match=r"jacobi fails at \(1, 2, 3, 3\)"):
        lie.from_json(doc)


@pytest.mark.parametrize(
    "doc",
    [
        {"brackets": []},
        {"dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {}}]},
        {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"7": "1"}}]},
        {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "x"}}]},
        {"dim": "3"},
    ],
)
def test_from_json_rejects_malformed(doc):
    with pytest.raises(lie.InvalidLieAlgebra):
        lie.from_json(doc)


def test_change_basis_stays_valid():
    r = random.Random(3)
    for _ in range(10):
        assert lie.validate(random_algebra(r))

import random

import pytest

from holotype import lie
from holotype.ratlin import Mat, random_matrix, random_rational


def _base_algebras():
    return [
        lie.abelian(4),
        lie.thurston(1),
        lie.thurston(2),
        lie.milnor(4),
        lie.milnor(6),
        lie.heisenberg_product([(1, 1), (1, 1)]),
        lie.gen_heisenberg(2, 1),
        # sl(2) + R: [h, e] = 2e, [h, f] = -2f, [e, f] = h
        lie.LieAlgebra.from_brackets(4, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}),
        # oscillator-type: [x, y] = z, [t, x] = y, [t, y] = -x
        lie.LieAlgebra.from_brackets(4, {(0, 1): {2: 1}, (0, 3): {1: -1}, (1, 3): {0: 1}}),
    ]


def random_algebra(rng: random.Random) -> lie.LieAlgebra:
    """A valid Lie algebra in a random rational basis."""
    L = rng.choice(_base_algebras())
    while True:
        P = Mat([[rng.randint(-2, 2) for _ in range(L.dim)] for _ in range(L.dim)])
        if P.det() != 0:
            return lie.change_basis(L, P)


def random_vector(rng: random.Random, n: int):
    return tuple(random_rational(rng) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20261016)

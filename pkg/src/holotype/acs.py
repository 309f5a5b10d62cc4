"""Left-invariant almost complex structures, Nijenhuis spaces and holomorphic type.

Matrix convention: column ``i`` of ``J.matrix`` holds the coordinates of
``J(e_i)``, so ``J.apply(v)`` is the ordinary matrix-vector product.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .lie import LieAlgebra, basis_vectors, bracket, commutator_ideal
from .ratlin import (
    Mat,
    Subspace,
    Vector,
    add,
    random_matrix,
    rng_from,
    span,
    sub,
    subspace_contains,
    subspace_leq,
    subspace_sum,
)

__all__ = [
    "AlmostComplexStructure",
    "NijenhuisData",
    "holomorphic_type",
    "ij_closure",
    "is_ij_subalgebra",
    "is_integrable",
    "minimal_ij_subalgebra",
    "nijenhuis_data",
    "nijenhuis_space",
    "nijenhuis_tensor",
    "random_acs",
    "standard_pairing",
    "type_t_witness",
]


class AlmostComplexStructure:
    """An endomorphism ``J`` with ``J^2 = -I``, checked exactly on construction."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Mat | Sequence[Sequence[object]]):
        if not isinstance(matrix, Mat):
            matrix = Mat(matrix)
        if not matrix.is_square():
            raise ValueError("an almost complex structure must be square")
        if matrix @ matrix != -Mat.identity(matrix.nrows):
            raise ValueError("matrix does not square to -I")
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def image(self, h: Subspace) -> Subspace:
        return h.image(self.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlmostComplexStructure):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"AlmostComplexStructure({self.matrix.to_strings()})"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "convention": "column i holds the coordinates of J(e_i)",
            "matrix": self.matrix.to_strings(),
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> AlmostComplexStructure:
        try:
            dim = doc["dim"]
            m = Mat.from_strings(doc["matrix"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed almost complex structure document: {exc}") from exc
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not match dim {dim}")
        return cls(m)


def standard_pairing(dim: int) -> AlmostComplexStructure:
    """``J0 e_{2k-1} = e_{2k}``, ``J0 e_{2k} = -e_{2k-1}`` (1-based)."""
    if dim % 2:
        raise ValueError("almost complex structures need even dimension")
    m = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        m[k + 1][k] = 1
        m[k][k + 1] = -1
    return AlmostComplexStructure(Mat(m, dim))


def _check(L: LieAlgebra, J: AlmostComplexStructure) -> None:
    if L.dim != J.dim:
        raise ValueError(f"algebra of dimension {L.dim} with a structure of dimension {J.dim}")


def nijenhuis_tensor(L: LieAlgebra, J: AlmostComplexStructure, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    """``N(x, y) = [x, y] + J[Jx, y] + J[x, Jy] - [Jx, Jy]``."""
    _check(L, J)
    jx, jy = J.apply(x), J.apply(y)
    inner = add(bracket(L, jx, y), bracket(L, x, jy))
    return sub(add(bracket(L, x, y), J.apply(inner)), bracket(L, jx, jy))


def nijenhuis_space(L: LieAlgebra, J: AlmostComplexStructure) -> Subspace:
    # N is bilinear and antisymmetric, so basis pairs i < j span its image.
    e = basis_vectors(L)
    values = [nijenhuis_tensor(L, J, e[i], e[j]) for i, j in itertools.combinations(range(L.dim), 2)]
    return span(values, L.dim)


@dataclass(frozen=True)
class NijenhuisData:
    algebra: LieAlgebra
    acs: AlmostComplexStructure
    ln: Subspace


def nijenhuis_data(L: LieAlgebra, J: AlmostComplexStructure) -> NijenhuisData:
    return NijenhuisData(L, J, nijenhuis_space(L, J))


def is_integrable(L: LieAlgebra, J: AlmostComplexStructure) -> bool:
    return nijenhuis_space(L, J).dim == 0


def _ij_products(L: LieAlgebra, J: AlmostComplexStructure, x: Vector) -> list[Vector]:
    """``[x, e_j] + J[x, J e_j]`` for every basis vector e_j."""
    e = basis_vectors(L)
    je = J.matrix.columns()
    return [add(bracket(L, x, e[j]), J.apply(bracket(L, x, je[j]))) for j in range(L.dim)]


def _closure_generators(L: LieAlgebra, J: AlmostComplexStructure, h: Subspace) -> list[Vector]:
    hb = list(h.vectors)
    gens = [J.apply(v) for v in hb]
    gens += [bracket(L, u, v) for u, v in itertools.combinations(hb, 2)]
    for x in hb:
        gens += _ij_products(L, J, x)
    return gens


def is_ij_subalgebra(L: LieAlgebra, J: AlmostComplexStructure, h: Subspace) -> bool:
    """Check the four defining conditions of an IJ-subalgebra exactly.

    (a) ``[h, h]`` in h, (b) ``J h = h``, (c) the Nijenhuis space lies in h,
    (d) ``[x, y] + J[x, Jy]`` in h for x in h, y in g. Both sides of (a) and
    (d) are bilinear in (x, y), so checking basis vectors of h and g suffices.
    """
    _check(L, J)
    if h.ambient_dim != L.dim:
        raise ValueError("subspace lives in the wrong ambient dimension")
    hb = h.vectors
    if not all(subspace_contains(h, bracket(L, u, v)) for u, v in itertools.combinations(hb, 2)):
        return False
    # J is invertible, so J h contained in h already forces J h = h.
    if not all(subspace_contains(h, J.apply(v)) for v in hb):
        return False
    if not subspace_leq(nijenhuis_space(L, J), h):
        return False
    return all(subspace_contains(h, v) for x in hb for v in _ij_products(L, J, x))


def ij_closure(
    L: LieAlgebra,
    J: AlmostComplexStructure,
    extra: Sequence[Sequence[Fraction]] = (),
    rng: random.Random | None = None,
) -> Subspace:
    """Smallest IJ-subalgebra containing ``extra``.

    Starting from the Nijenhuis space plus ``extra``, each round adds J h,
    the brackets of h with itself and the products ``[x, y] + J[x, Jy]``
    (x in h, y in g), and stops once the canonical subspace is unchanged.
    The dimension grows every round until then, so at most dim g rounds run.

    Every IJ-subalgebra containing ``extra`` contains the seed and is closed
    under the three operations, so by induction it contains each round and
    hence the fixpoint. The fixpoint meets all four conditions itself.

    ``rng``, if given, shuffles the generator vectors before each span; the
    canonical echelon form makes the result independent of that order.
    """
    _check(L, J)
    seed = [nijenhuis_tensor(L, J, x, y) for x, y in itertools.combinations(basis_vectors(L), 2)]
    seed += [tuple(v) for v in extra]
    if rng is not None:
        rng.shuffle(seed)
    h = span(seed, L.dim)
    while True:
        gens = list(h.vectors) + _closure_generators(L, J, h)
        if rng is not None:
            rng.shuffle(gens)
        nxt = span(gens, L.dim)
        if nxt == h:
            return h
        h = nxt


def minimal_ij_subalgebra(L: LieAlgebra, J: AlmostComplexStructure, rng: random.Random | None = None) -> Subspace:
    """The intersection of all IJ-subalgebras.

    This is :func:`ij_closure` with no extra vectors: the least fixpoint lies
    in every IJ-subalgebra and is one itself, so it equals the intersection.
    """
    return ij_closure(L, J, (), rng)


def holomorphic_type(L: LieAlgebra, J: AlmostComplexStructure) -> int:
    """``(dim g - d(g, J)) / 2`` with d the dimension of the minimal IJ-subalgebra."""
    if L.dim % 2:
        raise ValueError("holomorphic type needs an even-dimensional algebra")
    d = minimal_ij_subalgebra(L, J).dim
    assert d % 2 == 0, "J-invariant subspace of odd dimension"
    return (L.dim - d) // 2


def type_t_witness(L: LieAlgebra, J: AlmostComplexStructure) -> tuple[Subspace, bool]:
    """``h = [g, g] + J[g, g]`` and whether it is an IJ-subalgebra."""
    _check(L, J)
    derived = commutator_ideal(L)
    h = subspace_sum(derived, J.image(derived))
    return h, is_ij_subalgebra(L, J, h)


def random_acs(L: LieAlgebra | int, seed) -> AlmostComplexStructure:
    """``P J0 P^-1`` for a seeded random rational ``P``, resampled until invertible."""
    dim = L if isinstance(L, int) else L.dim
    if dim % 2:
        raise ValueError("almost complex structures need even dimension")
    rng = rng_from(seed)
    j0 = standard_pairing(dim).matrix
    while True:
        P = random_matrix(rng, dim, dim)
        if P.det() != 0:
            break
    return AlmostComplexStructure(P @ j0 @ P.inverse())

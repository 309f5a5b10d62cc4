"""Lie algebras given by structure constants.

Indexing convention: the Python API is 0-based, ``[e_i, e_j] = sum_k c[i, j, k] e_k``.
JSON documents and diagnostic messages use 1-based indices.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .ratlin import (
    Mat,
    Subspace,
    Vector,
    rat,
    rat_to_str,
    span,
    unit_vector,
)

__all__ = [
    "InvalidLieAlgebra",
    "LieAlgebra",
    "Violation",
    "abelian",
    "bracket",
    "change_basis",
    "commutator_ideal",
    "direct_sum",
    "first_violation",
    "from_json",
    "gen_heisenberg",
    "heisenberg_product",
    "is_two_step_nilpotent",
    "milnor",
    "thurston",
    "to_json",
    "validate",
]


class InvalidLieAlgebra(ValueError):
    """Raised when a structure-constant table is malformed or not a Lie algebra."""


class Violation(NamedTuple):
    kind: str  # "antisymmetry" or "jacobi"
    indices: tuple  # 1-based: (i, j, k) or (i, j, k, l)

    def __str__(self) -> str:
        return f"{self.kind} fails at {self.indices}"


class LieAlgebra:
    """Structure-constant table of a finite-dimensional Lie algebra over Q.

    The table is stored sparsely as ``{(i, j): {k: c}}`` holding only nonzero
    constants. The constructor does not check antisymmetry or Jacobi, so
    broken tables can be built and handed to :func:`validate`; use
    :meth:`from_brackets` to get mirrored brackets.
    """

    __slots__ = ("dim", "_table")

    def __init__(self, dim: int, table: Mapping[tuple[int, int], Mapping[int, object]] = ()):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in dict(table).items():
            for idx in (i, j, *coeffs):
                if not 0 <= idx < dim:
                    raise ValueError(f"index {idx} out of range for dimension {dim}")
            entry = {k: rat(c) for k, c in coeffs.items() if rat(c) != 0}
            if entry:
                clean[(i, j)] = dict(sorted(entry.items()))
        self.dim = dim
        self._table = dict(sorted(clean.items()))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]]) -> LieAlgebra:
        """Build from brackets ``[e_i, e_j]`` with ``i < j``; mirrors are added."""
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in brackets.items():
            if not i < j:
                raise ValueError(f"bracket keys must satisfy i < j, got ({i}, {j})")
            coeffs = {k: rat(c) for k, c in coeffs.items()}
            table[(i, j)] = coeffs
            table[(j, i)] = {k: -c for k, c in coeffs.items()}
        return cls(dim, table)

    @property
    def table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {key: dict(v) for key, v in self._table.items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._table.get((i, j), {}).get(k, Fraction(0))

    def basis_bracket(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, c in self._table.get((i, j), {}).items():
            out[k] = c
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self) -> int:
        return hash((self.dim, tuple((k, tuple(v.items())) for k, v in self._table.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self._table) // 2})"


def _sparse(v: Sequence[Fraction]) -> dict[int, Fraction]:
    return {i: x for i, x in enumerate(v) if x}


def _sparse_bracket(L: LieAlgebra, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in L._table.get((i, j), {}).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def bracket(L: LieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError(f"vectors of length {len(x)}, {len(y)} in a {L.dim}-dimensional algebra")
    out = [Fraction(0)] * L.dim
    for k, c in _sparse_bracket(L, _sparse(x), _sparse(y)).items():
        out[k] = c
    return tuple(out)


def first_violation(L: LieAlgebra) -> Violation | None:
    """First failing antisymmetry or Jacobi identity, 1-based, or ``None``."""
    for (i, j), coeffs in L._table.items():
        mirror = L._table.get((j, i), {})
        for k in sorted(set(coeffs) | set(mirror)):
            if coeffs.get(k, 0) != -mirror.get(k, 0):
                return Violation("antisymmetry", (i + 1, j + 1, k + 1))
    # With antisymmetry in hand the Jacobiator is alternating, so distinct
    # ordered triples i < j < k cover every case.
    for i, j, k in itertools.combinations(range(L.dim), 3):
        ei, ej, ek = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
        total: dict[int, Fraction] = {}
        for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            for l, v in _sparse_bracket(L, _sparse_bracket(L, a, b), c).items():
                total[l] = total.get(l, 0) + v
        bad = sorted(l for l, v in total.items() if v)
        if bad:
            return Violation("jacobi", (i + 1, j + 1, k + 1, bad[0] + 1))
    return None


def validate(L: LieAlgebra) -> bool:
    return first_violation(L) is None


def commutator_ideal(L: LieAlgebra) -> Subspace:
    return span((L.basis_bracket(i, j) for (i, j) in L._table), L.dim)


def is_two_step_nilpotent(L: LieAlgebra) -> bool:
    """``[g, [g, g]] = 0``."""
    derived = commutator_ideal(L)
    return all(
        not any(bracket(L, unit_vector(L.dim, i), v))
        for v in derived.vectors
        for i in range(L.dim)
    )


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    shift = L1.dim
    table = L1.table
    for (i, j), coeffs in L2._table.items():
        table[(i + shift, j + shift)] = {k + shift: c for k, c in coeffs.items()}
    return LieAlgebra(L1.dim + L2.dim, table)


def abelian(d: int) -> LieAlgebra:
    return LieAlgebra(d)


def thurston(n: int) -> LieAlgebra:
    """The generalized Thurston algebra of dimension 2n + 2.

    Basis e_1..e_{2n+2} (1-based); the only nonzero brackets are
    ``[e_i, e_{n+1}] = e_{n+1+i}`` for 1 <= i <= n.
    """
    if n < 1:
        raise ValueError("thurston(n) needs n >= 1")
    return LieAlgebra.from_brackets(2 * n + 2, {(i, n): {n + 1 + i: 1} for i in range(n)})


def gen_heisenberg(q: int, p: int) -> LieAlgebra:
    """Lie algebra of the generalized Heisenberg group H(q, p).

    The group consists of block matrices ``[[I_p, A, B], [0, I_q, C], [0, 0, I_q]]``
    with A, B of size p x q and C diagonal. In the algebra the commutator of
    two such nilpotent matrices has only a B-block, equal to ``A C' - A' C``,
    so ``[A_ab, C_b] = B_ab`` are the only nonzero brackets.

    Basis order: A_ab row-major over (a, b), then B_ab in the same order, then
    C_1..C_q. Dimension 2qp + q.
    """
    if q < 1:
        raise ValueError("gen_heisenberg(q, p) needs q >= 1")
    if p < 0:
        raise ValueError("gen_heisenberg(q, p) needs p >= 0")
    pq = p * q
    brackets = {}
    for a in range(p):
        for b in range(q):
            idx = a * q + b
            brackets[(idx, 2 * pq + b)] = {pq + idx: 1}
    return LieAlgebra.from_brackets(2 * pq + q, brackets)


def heisenberg_product(factors: Iterable[tuple[int, int]]) -> LieAlgebra:
    """Direct sum of ``gen_heisenberg(q, p)`` over the given ``(q, p)`` pairs."""
    out = LieAlgebra(0)
    for q, p in factors:
        out = direct_sum(out, gen_heisenberg(q, p))
    return out


def milnor(even_dim: int) -> LieAlgebra:
    """Solvable algebra with ``[e_i, e_{2n}] = e_i`` for i < 2n = even_dim."""
    if even_dim < 2 or even_dim % 2:
        raise ValueError("milnor() needs an even dimension >= 2")
    last = even_dim - 1
    return LieAlgebra.from_brackets(even_dim, {(i, last): {i: 1} for i in range(last)})


def change_basis(L: LieAlgebra, P: Mat) -> LieAlgebra:
    """Structure constants in the basis ``f_i = P e_i`` (columns of ``P``)."""
    if P.shape != (L.dim, L.dim):
        raise ValueError("basis change matrix has the wrong shape")
    Pinv = P.inverse()
    cols = P.columns()
    brackets = {}
    for i, j in itertools.combinations(range(L.dim), 2):
        v = Pinv.apply(bracket(L, cols[i], cols[j]))
        brackets[(i, j)] = _sparse(v)
    return LieAlgebra.from_brackets(L.dim, brackets)


def to_json(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j), coeffs in L._table.items():
        if i < j:
            brackets.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "coeffs": {str(k + 1): rat_to_str(c) for k, c in coeffs.items()},
                }
            )
    return {"dim": L.dim, "brackets": brackets}


def from_json(doc: Mapping) -> LieAlgebra:
    """Parse and validate ``{"dim": d, "brackets": [{"i", "j", "coeffs"}]}``.

    Only entries with ``i < j`` are accepted; the mirrored brackets are
    synthesized. Raises :class:`InvalidLieAlgebra` on schema problems or if
    the Jacobi identity fails (the message names the failing indices).
    """
    try:
        dim = doc["dim"]
        entries = doc.get("brackets", [])
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise InvalidLieAlgebra(f"bad dimension {dim!r}")
        brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        for e in entries:
            i, j = e["i"], e["j"]
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
                raise InvalidLieAlgebra(f"bracket indices must satisfy 1 <= i < j <= dim, got ({i}, {j})")
            if (i - 1, j - 1) in brackets:
                raise InvalidLieAlgebra(f"duplicate bracket ({i}, {j})")
            coeffs = {}
            for k, c in e["coeffs"].items():
                k = int(k)
                if not 1 <= k <= dim:
                    raise InvalidLieAlgebra(f"coefficient index {k} out of range")
                coeffs[k - 1] = rat(c)
            brackets[(i - 1, j - 1)] = coeffs
    except InvalidLieAlgebra:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, ZeroDivisionError) as exc:
        raise InvalidLieAlgebra(f"malformed algebra document: {exc}") from exc
    L = LieAlgebra.from_brackets(dim, brackets)
    bad = first_violation(L)
    if bad is not None:
        raise InvalidLieAlgebra(f"not a Lie algebra: {bad}")
    return L


def basis_vectors(L: LieAlgebra) -> list[Vector]:
    return [unit_vector(L.dim, i) for i in range(L.dim)]


"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions;
matrices are immutable :class:`Mat` objects. Linear subspaces are kept in a
canonical reduced row echelon form so that equal subspaces compare equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "Mat",
    "Subspace",
    "Vector",
    "cayley_orthogonal",
    "nullspace",
    "random_antisymmetric",
    "random_matrix",
    "random_rational",
    "rat",
    "rat_to_str",
    "rng_from",
    "rref",
    "span",
    "subspace_contains",
    "subspace_intersection",
    "subspace_leq",
    "subspace_sum",
    "unit_vector",
    "zero_vector",
]

Vector = tuple  # tuple[Fraction, ...]
RatLike = Union[int, str, Rational]


def rat(x: RatLike) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Accepts ints, Fractions and strings such as ``"-3/4"``. Floats are refused
    so that no rounded value can sneak into a computation.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (Fraction, int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def vec(values: Iterable[RatLike]) -> Vector:
    return tuple(rat(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    """The ``i``-th standard basis vector of length ``n`` (0-based)."""
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return Fraction(total)


class Mat:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[RatLike]], ncols: int | None = None):
        rows = tuple(vec(r) for r in rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("ragged matrix rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError(f"expected {ncols} columns, got {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls((unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Mat:
        return cls((zero_vector(ncols) for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RatLike]], nrows: int | None = None) -> Mat:
        if not columns:
            return cls.zeros(nrows or 0, 0)
        return cls(zip(*columns), len(columns))

    @classmethod
    def diagonal(cls, entries: Sequence[RatLike]) -> Mat:
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n
        )

    @classmethod
    def block(cls, blocks: Sequence[Sequence[Mat]]) -> Mat:
        rows = []
        for band in blocks:
            for r in range(band[0].nrows):
                rows.append(sum((b.row(r) for b in band), ()))
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self._rows)
        return f"Mat([{body}])"

    @property
    def T(self) -> Mat:
        return Mat(zip(*self._rows), self.nrows) if self._rows else Mat.zeros(self.ncols, 0)

    def __add__(self, other: Mat) -> Mat:
        self._same_shape(other)
        return Mat((add(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other: Mat) -> Mat:
        self._same_shape(other)
        return Mat((sub(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __neg__(self) -> Mat:
        return Mat((tuple(-x for x in r) for r in self._rows), self.ncols)

    def __rmul__(self, c: RatLike) -> Mat:
        c = rat(c)
        return Mat((scale(c, r) for r in self._rows), self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Mat(
                (tuple(dot(r, c) for c in cols) for r in self._rows), other.ncols
            )
        return self.apply(other)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for a {self.shape} matrix")
        return tuple(dot(r, v) for r in self._rows)

    def _same_shape(self, other: Mat) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self.T == -self

    def submatrix(self, rows: range | Sequence[int], cols: range | Sequence[int]) -> Mat:
        return Mat(([self._rows[i][j] for j in cols] for i in rows), len(cols))

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self._rows]
        n = self.nrows
        result = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                result = -result
            pivot = m[c][c]
            result *= pivot
            for r in range(c + 1, n):
                f = m[r][c] / pivot
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return result

    def inverse(self) -> Mat:
        """Gauss-Jordan inverse; raises ``ZeroDivisionError`` if singular."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Mat(r + unit_vector(n, i) for i, r in enumerate(self._rows))
        red, pivots = _rref(aug.rows, aug.ncols)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Mat((r[n:] for r in red), n)

    def rank(self) -> int:
        return len(_rref(self._rows, self.ncols)[1])

    def to_strings(self) -> list[list[str]]:
        return [[rat_to_str(x) for x in r] for r in self._rows]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> Mat:
        return cls(rows)


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rref(m: Mat) -> Mat:
    """Reduced row echelon form, zero rows kept at the bottom."""
    red, _ = _rref(m.rows, m.ncols)
    return Mat(red, m.ncols)


def nullspace(m: Mat) -> list[Vector]:
    """Basis of the right kernel ``{x : m x = 0}``, one vector per free column."""
    red, pivots = _rref(m.rows, m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^ambient_dim.

    ``basis`` rows are the nonzero rows of a reduced row echelon matrix, which
    is unique for the subspace; dataclass equality is therefore subspace
    equality. Build instances with :func:`span`.
    """

    ambient_dim: int
    basis: Mat

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.rows

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x != 0) for r in self.basis.rows]

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, Mat.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, Mat.identity(n))

    def image(self, m: Mat) -> Subspace:
        """The subspace ``m(self)`` for a square matrix acting on column vectors."""
        return span([m.apply(v) for v in self.vectors], m.nrows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, basis={self.basis.to_strings()})"


def span(vectors: Iterable[Sequence[RatLike]], ambient_dim: int) -> Subspace:
    rows = [vec(v) for v in vectors]
    for v in rows:
        if len(v) != ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    rows = [v for v in rows if not is_zero(v)]
    red, pivots = _rref(rows, ambient_dim)
    return Subspace(ambient_dim, Mat(red[: len(pivots)], ambient_dim))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.vectors + b.vectors, a.ambient_dim)


def subspace_contains(a: Subspace, v: Sequence[RatLike]) -> bool:
    v = vec(v)
    if len(v) != a.ambient_dim:
        raise ValueError(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    # Reduce against the echelon basis: pivot columns are unit columns.
    rest = list(v)
    for row, p in zip(a.vectors, a.pivots()):
        f = rest[p]
        if f:
            rest = [x - f * y for x, y in zip(rest, row)]
    return is_zero(rest)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return all(subspace_contains(b, v) for v in a.vectors)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by the kernel method.

    Stack the bases as the columns of ``M = [A^T | B^T]``. A kernel vector
    ``(x, y)`` of ``M`` satisfies ``x.A = -y.B``, so ``x.A`` ranges over the
    intersection as ``(x, y)`` ranges over the kernel.
    """
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    m = Mat.from_columns(a.vectors + b.vectors)
    out = []
    for k in nullspace(m):
        x = k[: a.dim]
        out.append(tuple(dot(x, col) for col in a.basis.columns()))
    return span(out, a.ambient_dim)


def cayley_orthogonal(s: Mat) -> Mat:
    """Cayley transform ``(I - s)(I + s)^-1`` of an antisymmetric matrix.

    ``I + s`` is invertible because an antisymmetric real matrix has purely
    imaginary eigenvalues, so -1 is never one of them.
    """
    if not s.is_antisymmetric():
        raise ValueError("Cayley transform requires an antisymmetric matrix")
    eye = Mat.identity(s.nrows)
    return (eye - s) @ (eye + s).inverse()


def rng_from(seed) -> random.Random:
    """A ``random.Random`` (Mersenne Twister) from an int, a string or an rng.

    Strings are hashed with SHA-512 by ``random.seed``, so string seed
    material is reproducible across processes regardless of PYTHONHASHSEED.
    """
    if isinstance(seed, random.Random):
        return seed
    if isinstance(seed, (int, str)):
        return random.Random(seed)
    raise TypeError(f"unsupported seed type {type(seed).__name__}")


def random_rational(rng: random.Random) -> Fraction:
    # numerators in [-9, 9], denominators in [1, 9]
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_matrix(rng: random.Random, nrows: int, ncols: int) -> Mat:
    return Mat(
        ([random_rational(rng) for _ in range(ncols)] for _ in range(nrows)), ncols
    )


def random_antisymmetric(rng: random.Random, n: int) -> Mat:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = random_rational(rng)
            m[i][j] = x
            m[j][i] = -x
    return Mat(m, n)

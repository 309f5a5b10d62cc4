"""Metrics, Kaehler forms and closedness of left-invariant 2-forms.

Sign conventions are fixed by the structure equations of the Thurston
algebra. Wedge products use the determinant convention
``(a ^ b)(x, y) = a(x) b(y) - a(y) b(x)`` and the Chevalley-Eilenberg
differential of left-invariant forms is

    d a(x, y)       = -a([x, y])
    d F(x, y, z)    = -F([x, y], z) + F([x, z], y) - F([y, z], x)

With these, ``d alpha_{n+1+i} = alpha_{n+1} ^ alpha_i`` holds on thurston(n)
where alpha is the basis dual to e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .acs import AlmostComplexStructure, standard_pairing
from .lie import LieAlgebra, bracket
from .ratlin import (
    Mat,
    cayley_orthogonal,
    dot,
    random_antisymmetric,
    rng_from,
    unit_vector,
)

__all__ = [
    "Metric",
    "ThreeForm",
    "TwoForm",
    "block_form_check",
    "ce_d1",
    "ce_d2",
    "d_by_wedge_expansion",
    "identity_metric",
    "is_compatible",
    "is_symplectic",
    "kaehler_form",
    "lemma_coefficient_conditions",
    "lemma_family_from",
    "lemma_structure",
    "nonsymmetric_a_case",
    "rotation_b_case",
    "sample_compatible",
    "sample_lemma_family",
    "wedge11",
    "wedge21",
]


@dataclass(frozen=True)
class Metric:
    """Inner product given by a symmetric positive-definite Gram matrix."""

    gram: Mat

    def __post_init__(self):
        g = self.gram
        if not g.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        for k in range(1, g.nrows + 1):
            if g.submatrix(range(k), range(k)).det() <= 0:
                raise ValueError(f"Gram matrix is not positive definite (minor {k})")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __call__(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return dot(x, self.gram.apply(y))


def identity_metric(dim: int) -> Metric:
    return Metric(Mat.identity(dim))


@dataclass(frozen=True)
class TwoForm:
    """Antisymmetric bilinear form, ``f[i, j] = F(e_i, e_j)``."""

    f: Mat

    def __post_init__(self):
        if not self.f.is_antisymmetric():
            raise ValueError("2-form matrix must be antisymmetric")

    @property
    def dim(self) -> int:
        return self.f.nrows

    def __call__(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return dot(x, self.f.apply(y))

    def __add__(self, other: TwoForm) -> TwoForm:
        return TwoForm(self.f + other.f)

    def is_nondegenerate(self) -> bool:
        return self.f.det() != 0


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


@dataclass(frozen=True)
class ThreeForm:
    """Alternating trilinear form stored by its components on i < j < k."""

    dim: int
    components: Mapping[tuple[int, int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, v in dict(self.components).items():
            if list(key) != sorted(set(key)) or len(key) != 3:
                raise ValueError(f"component key {key} is not strictly increasing")
            if v:
                clean[key] = Fraction(v)
        object.__setattr__(self, "components", dict(sorted(clean.items())))

    def __getitem__(self, ijk: tuple[int, int, int]) -> Fraction:
        if len(set(ijk)) < 3:
            return Fraction(0)
        order = sorted(range(3), key=lambda t: ijk[t])
        key = tuple(ijk[t] for t in order)
        return _perm_sign(order) * self.components.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other: ThreeForm) -> ThreeForm:
        out = dict(self.components)
        for k, v in other.components.items():
            out[k] = out.get(k, 0) + v
        return ThreeForm(self.dim, out)

    def scaled(self, c: Fraction) -> ThreeForm:
        return ThreeForm(self.dim, {k: c * v for k, v in self.components.items()})


def is_compatible(L: LieAlgebra | None, g: Metric, J: AlmostComplexStructure) -> bool:
    """``g(Jx, Jy) = g(x, y)``, i.e. ``J^T G J = G``."""
    if L is not None and L.dim != J.dim:
        return False
    if g.dim != J.dim:
        return False
    return J.matrix.T @ g.gram @ J.matrix == g.gram


def kaehler_form(g: Metric, J: AlmostComplexStructure) -> TwoForm:
    """``F(x, y) = g(Jx, y)``; raises ``ValueError`` if J is not g-compatible."""
    if not is_compatible(None, g, J):
        raise ValueError("Kaehler form needs a structure compatible with the metric")
    # F(e_i, e_j) = (J e_i)^T G e_j = (J^T G)_{ij}
    return TwoForm(J.matrix.T @ g.gram)


def ce_d1(L: LieAlgebra, alpha: Sequence[Fraction]) -> TwoForm:
    e = [unit_vector(L.dim, i) for i in range(L.dim)]
    return TwoForm(Mat([[-dot(alpha, bracket(L, x, y)) for y in e] for x in e], L.dim))


def ce_d2(L: LieAlgebra, F: TwoForm) -> ThreeForm:
    if F.dim != L.dim:
        raise ValueError("form and algebra dimensions differ")
    e = [unit_vector(L.dim, i) for i in range(L.dim)]
    out = {}
    for i, j, k in itertools.combinations(range(L.dim), 3):
        x, y, z = e[i], e[j], e[k]
        out[(i, j, k)] = -F(bracket(L, x, y), z) + F(bracket(L, x, z), y) - F(bracket(L, y, z), x)
    return ThreeForm(L.dim, out)


def wedge11(a: Sequence[Fraction], b: Sequence[Fraction]) -> TwoForm:
    n = len(a)
    return TwoForm(Mat([[a[i] * b[j] - a[j] * b[i] for j in range(n)] for i in range(n)], n))


def wedge21(w: TwoForm, b: Sequence[Fraction]) -> ThreeForm:
    """``w ^ b`` as the alternation sum over S_3 divided by 2! 1!.

    Equals ``b ^ w`` since the degrees multiply to an even number.
    """
    out = {}
    for idx in itertools.combinations(range(w.dim), 3):
        total = Fraction(0)
        for perm in itertools.permutations(range(3)):
            a0, a1, a2 = (idx[p] for p in perm)
            total += _perm_sign(perm) * w.f[a0, a1] * b[a2]
        out[idx] = total / 2
    return ThreeForm(w.dim, out)


def d_by_wedge_expansion(L: LieAlgebra, F: TwoForm) -> ThreeForm:
    """``dF`` from ``F = 1/2 sum F_ij a_i ^ a_j`` and the Leibniz rule.

    ``dF = 1/2 sum F_ij (d a_i ^ a_j - a_i ^ d a_j)``, an independent route to
    :func:`ce_d2` built from the 1-form differential and wedge products.
    """
    n = L.dim
    alphas = [unit_vector(n, i) for i in range(n)]
    dalphas = [ce_d1(L, a) for a in alphas]
    total = ThreeForm(n)
    for i in range(n):
        for j in range(n):
            c = F.f[i, j]
            if not c:
                continue
            term = wedge21(dalphas[i], alphas[j]) + wedge21(dalphas[j], alphas[i]).scaled(Fraction(-1))
            total = total + term.scaled(c / 2)
    return total


def is_symplectic(L: LieAlgebra, g: Metric, J: AlmostComplexStructure) -> bool:
    if not is_compatible(L, g, J):
        return False
    F = kaehler_form(g, J)
    # Nondegeneracy is automatic for compatible J; the check guards conventions.
    return ce_d2(L, F).is_zero() and F.is_nondegenerate()


def _halves(J: AlmostComplexStructure | Mat) -> tuple[Mat, int]:
    m = J.matrix if isinstance(J, AlmostComplexStructure) else J
    if m.nrows % 2 or m.nrows < 4 or not m.is_square():
        raise ValueError(f"expected a square matrix of size 2n + 2 with n >= 1, got {m.shape}")
    return m, m.nrows // 2


def block_form_check(J: AlmostComplexStructure | Mat, n: int) -> bool:
    """``J = [[O, A], [-A^T, O]]`` with A orthogonal and its leading n x n block symmetric."""
    m, h = _halves(J)
    if h != n + 1:
        raise ValueError(f"matrix of size {m.nrows} is not 2n + 2 for n = {n}")
    top, bot = range(h), range(h, 2 * h)
    if m.submatrix(top, top) != Mat.zeros(h, h) or m.submatrix(bot, bot) != Mat.zeros(h, h):
        return False
    A = m.submatrix(top, bot)
    if m.submatrix(bot, top) != -A.T:
        return False
    if A @ A.T != Mat.identity(h):
        return False
    return A.submatrix(range(n), range(n)).is_symmetric()


def lemma_coefficient_conditions(J: AlmostComplexStructure, n: int) -> bool:
    """Coefficient equations for ``dF = 0`` with the identity metric on thurston(n).

    With ``a[i][j]`` the e_j-coordinate of ``J e_i`` (1-based):
    ``a[j][n+i+1] = a[i][n+j+1]`` for 1 <= i, j <= n and
    ``a[n+i+1][n+j+1] = 0`` for 1 <= i <= n, 1 <= j <= n + 1.
    """
    m = J.matrix
    if m.nrows != 2 * n + 2:
        raise ValueError("size mismatch")

    def a(i: int, j: int) -> Fraction:
        return m[j - 1, i - 1]

    sym = all(a(j, n + i + 1) == a(i, n + j + 1) for i in range(1, n + 1) for j in range(1, n + 1))
    low = all(a(n + i + 1, n + j + 1) == 0 for i in range(1, n + 1) for j in range(1, n + 2))
    return sym and low


def lemma_structure(A: Mat) -> AlmostComplexStructure:
    """``[[O, A], [-A^T, O]]`` for an orthogonal ``A``."""
    h = A.nrows
    return AlmostComplexStructure(Mat.block([[Mat.zeros(h, h), A], [-A.T, Mat.zeros(h, h)]]))


def lemma_family_from(S: Mat, signs: Sequence[int]) -> AlmostComplexStructure:
    """Lemma-family structure with ``A = R D R^T``, ``R = cayley(S)``, ``D = diag(signs)``.

    A is symmetric and orthogonal, so its leading block is symmetric.
    """
    if any(s not in (1, -1) for s in signs) or len(signs) != S.nrows:
        raise ValueError("signs must be a list of +1/-1 of matching size")
    R = cayley_orthogonal(S)
    A = R @ Mat.diagonal(signs) @ R.T
    return lemma_structure(A)


def sample_lemma_family(n: int, seed) -> AlmostComplexStructure:
    """A block-form structure with ``A = R D R^T``, ``R`` Cayley, ``D`` a diagonal of signs.

    Such ``A`` are symmetric orthogonal, so the top-left block is symmetric.
    Coverage is partial: orthogonal ``A`` that are not symmetric but still
    have a symmetric top-left block (see :func:`nonsymmetric_a_case`) are
    never produced.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = rng_from(seed)
    S = random_antisymmetric(rng, n + 1)
    signs = [rng.choice((1, -1)) for _ in range(n + 1)]
    return lemma_family_from(S, signs)


def sample_compatible(dim: int, seed) -> AlmostComplexStructure:
    """``Q J0 Q^T`` with ``Q`` the Cayley transform of a seeded antisymmetric matrix."""
    if dim % 2:
        raise ValueError("almost complex structures need even dimension")
    rng = rng_from(seed)
    Q = cayley_orthogonal(random_antisymmetric(rng, dim))
    return AlmostComplexStructure(Q @ standard_pairing(dim).matrix @ Q.T)


def nonsymmetric_a_case() -> AlmostComplexStructure:
    """n = 2, A orthogonal and not symmetric, leading block diag(1, 0) symmetric."""
    return lemma_structure(Mat([[1, 0, 0], [0, 0, 1], [0, -1, 0]]))


def rotation_b_case() -> AlmostComplexStructure:
    """n = 2, A a quarter turn in the first two coordinates; leading block antisymmetric."""
    return lemma_structure(Mat([[0, -1, 0], [1, 0, 0], [0, 0, 1]]))


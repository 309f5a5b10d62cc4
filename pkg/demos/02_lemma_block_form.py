# Which compatible structures on h_{2n+2} are symplectic?
#
# Closedness of the Kaehler form is checked directly with the
# Chevalley-Eilenberg differential and compared with the block-form test.

from holotype import lie
from holotype.symplectic import (
    block_form_check,
    ce_d1,
    ce_d2,
    d_by_wedge_expansion,
    identity_metric,
    is_symplectic,
    kaehler_form,
    nonsymmetric_a_case,
    rotation_b_case,
    sample_compatible,
)
from holotype.ratlin import unit_vector

n = 2
L = lie.thurston(n)
g = identity_metric(L.dim)

# Structure equations: d alpha_{n+1+i} = alpha_{n+1} ^ alpha_i.
for i in range(L.dim):
    da = ce_d1(L, unit_vector(L.dim, i))
    nz = {(a + 1, b + 1): str(da.f[a, b]) for a in range(L.dim) for b in range(a + 1, L.dim) if da.f[a, b]}
    print(f"d alpha_{i + 1} components:", nz or "0")

for name, J in [("A non-symmetric, B symmetric", nonsymmetric_a_case()), ("B a rotation", rotation_b_case())]:
    F = kaehler_form(g, J)
    dF = ce_d2(L, F)
    assert dF == d_by_wedge_expansion(L, F)
    print(f"\n{name}: block form {block_form_check(J, n)}, dF nonzero components {len(dF.components)},"
          f" symplectic {is_symplectic(L, g, J)}")

agree = sum(is_symplectic(L, g, J) == block_form_check(J, n) for J in (sample_compatible(L.dim, s) for s in range(50)))
print(f"\nrandom compatible structures where the two predicates agree: {agree}/50")

# Type T: small commutator ideals force nonzero holomorphic type.
#
# For any J, h = [g, g] + J[g, g] is an IJ-subalgebra, so the holomorphic type
# is at least (dim g - dim h) / 2.

from holotype import acs, lie
from holotype.symplectic import sample_compatible

for factors in ([(1, 1), (1, 1)], [(2, 1)], [(1, 2), (1, 1)], [(2, 2)]):
    W = lie.heisenberg_product(factors)
    derived = lie.commutator_ideal(W)
    print(f"W{factors}: dim {W.dim}, dim [w,w] = {derived.dim}")
    for seed in range(3):
        J = acs.random_acs(W, seed)
        h, ok = acs.type_t_witness(W, J)
        print(f"   seed {seed}: witness dim {h.dim} IJ={ok}, minimal dim {acs.minimal_ij_subalgebra(W, J).dim},"
              f" type {acs.holomorphic_type(W, J)}")

L = lie.thurston(3)
types = [acs.holomorphic_type(L, sample_compatible(L.dim, s)) for s in range(10)]
print("\nthurston(3), random compatible (mostly non-symplectic) J: types", types)

# The solvable algebra [e_i, e_{2n}] = e_i: every almost complex structure is integrable.

from holotype import acs, lie

for dim in (2, 4, 6, 8):
    L = lie.milnor(dim)
    dims = [acs.nijenhuis_space(L, acs.random_acs(L, s)).dim for s in range(10)]
    types = {acs.holomorphic_type(L, acs.random_acs(L, s)) for s in range(10)}
    print(f"milnor({dim}): commutator dim {lie.commutator_ideal(L).dim}, Nijenhuis dims {dims}, types {types}")

# Contrast: a non-integrable structure on sl(2) + R.
sl2r = lie.LieAlgebra.from_brackets(4, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
J = acs.standard_pairing(4)
print("\nsl(2)+R with the pairing structure: Nijenhuis dim", acs.nijenhuis_space(sl2r, J).dim,
      " type", acs.holomorphic_type(sl2r, J))

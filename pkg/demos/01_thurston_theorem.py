# Holomorphic type of symplectic structures on the generalized Thurston algebra.
#
# The algebra h_{2n+2} has basis e_1..e_{2n+2} with [e_i, e_{n+1}] = e_{n+1+i}.
# Every compatible symplectic J has the block form [[0, A], [-A^T, 0]] and
# holomorphic type 1.

from holotype import acs, lie
from holotype.ratlin import Mat
from holotype.symplectic import identity_metric, is_symplectic, lemma_structure, sample_lemma_family

n = 2
L = lie.thurston(n)
print("dim h =", L.dim, " commutator ideal dim =", lie.commutator_ideal(L).dim)

# The Kim structure: A is the identity.
J = lemma_structure(Mat.identity(n + 1))
print("Kim J:")
for row in J.matrix.to_strings():
    print("   ", row)
print("symplectic:", is_symplectic(L, identity_metric(L.dim), J))
ln = acs.nijenhuis_space(L, J)
print("Nijenhuis space dim:", ln.dim, "basis:", ln.basis.to_strings())
print("holomorphic type:", acs.holomorphic_type(L, J))

# A random member of the family with A = R D R^T.
J = sample_lemma_family(n, seed=2026)
print("\nrandom Lemma-family J, first column:", [str(x) for x in J.matrix.column(0)])
print("symplectic:", is_symplectic(L, identity_metric(L.dim), J))
print("holomorphic type:", acs.holomorphic_type(L, J))

# Sweep a few n.
for n in range(1, 6):
    L = lie.thurston(n)
    types = {acs.holomorphic_type(L, sample_lemma_family(n, s)) for s in range(10)}
    print(f"n={n}: types seen over 10 samples = {types}")

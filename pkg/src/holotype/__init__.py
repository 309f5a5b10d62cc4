"""Exact computation of the holomorphic type of left-invariant almost complex structures."""

from .acs import (
    AlmostComplexStructure,
    holomorphic_type,
    is_ij_subalgebra,
    is_integrable,
    minimal_ij_subalgebra,
    nijenhuis_space,
    nijenhuis_tensor,
    random_acs,
    standard_pairing,
    type_t_witness,
)
from .lie import (
    LieAlgebra,
    abelian,
    bracket,
    commutator_ideal,
    direct_sum,
    gen_heisenberg,
    heisenberg_product,
    milnor,
    thurston,
    validate,
)
from .ratlin import Mat, Subspace, span
from .symplectic import (
    block_form_check,
    identity_metric,
    is_compatible,
    is_symplectic,
    kaehler_form,
    sample_compatible,
    sample_lemma_family,
)

__version__ = "0.1.0"

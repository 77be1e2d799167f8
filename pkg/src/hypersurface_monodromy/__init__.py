"""Exact Hodge, monodromy and kernel-largeness computations for projective hypersurfaces."""

from .algebra_core import (
    Cyclotomic,
    Echelon,
    HermitianForm,
    Matrix,
    cyclotomic_arith,
    exact_rank,
    hermitian_signature,
    hermitian_signature_strict,
    radical_dimension,
)
from .classifier import (
    ClassificationRecord,
    LieType,
    Verdict,
    classify,
    discriminant_degree,
    group_type_cover,
    group_type_natural,
    locally_isomorphic,
    product_obstruction,
)
from .errors import *  # noqa: F401,F403
from .graded_rings import (
    GradedIdeal,
    WeightedRing,
    fermat_jacobian,
    jacobian_graded_dim,
    macaulay_check,
    multiplication_map,
    socle_degree,
    torelli_witness,
)
from .hodge_theory import (
    CoverSpec,
    HodgeVector,
    eigenspace_dimension,
    eigenspace_signature,
    euler_characteristic,
    hodge_cyclic_eigenspace,
    hodge_hypersurface,
    lattice_count,
    primitive_betti,
    rank_complex,
    rank_real,
    signature_primitive,
    suspension_periodicity_check,
)
from .reflection_groups import GeneratedGroup, dichotomy_probe, group_closure, invariant_subspace_probe
from .vanishing_cycles import (
    ComplexReflection,
    VanishingLattice,
    a_lattice,
    join_monodromy,
    nodal_monodromy,
    pl_transform,
    reflection_matrix,
    suspend_lattice,
)

__version__ = "0.1.0"

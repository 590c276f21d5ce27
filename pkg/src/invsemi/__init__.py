"""Exact computations on finite inverse semigroups: Brandt extensions,
matrix units, congruences and Brandt decompositions."""

from .bicyclic import (
    BicyclicElement,
    bicyclic_format,
    bicyclic_inverse,
    bicyclic_is_idempotent,
    bicyclic_mul,
    bicyclic_parse,
)
from .congruences import (
    Congruence,
    CongruenceLattice,
    all_congruences,
    hom_h,
    is_congruence,
    is_congruence_free,
    principal_congruence,
    quotient,
    rees_congruence,
)
from .constructions import (
    BrandtLabel,
    SandwichMatrix,
    adjoin_identity,
    adjoin_zero,
    brandt_extension,
    cyclic_group,
    group_from_table,
    inverse_symmetric_monoid,
    matrix_units,
    rees_matrix,
)
from .core import (
    ElementMap,
    FiniteSemigroup,
    GreenClasses,
    Verdict,
    check_associativity,
    find_bicyclic_witness,
    green_relations,
    idempotents,
    inverse_of,
    is_0_simple,
    is_group,
    is_homomorphism,
    is_inverse_semigroup,
    relabel,
    semigroups_isomorphic,
)
from .document import dumps, load, loads, store
from .kernels import BACKEND
from .structure import (
    BlockPartition,
    BrandtDecomposition,
    block_partition,
    block_translation,
    decompose_brandt,
    extract_maximal_subgroup,
    is_completely_0_simple_inverse,
    is_primitive_idempotent,
)

__version__ = "0.1.0"

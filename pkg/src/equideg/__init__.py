"""Computable equivariant cohomotopy at desk scale.

Exact Burnside ring arithmetic for finite groups, the equivariant Brouwer
degree over fixed-point subspaces, and the Schwartz index of compact
perturbations of sequence-space Fredholm operators via Galerkin reduction,
together with the cocycle algebra (pinch sum, inverse, cup product,
suspension, picture conversion).
"""

from .burnside import (
    BurnsideElement,
    MarksVector,
    TableOfMarks,
    augmentation_ideal,
    char,
    ideal_power,
    ideal_quotient_invariants,
    induction,
    marks_for_group,
    membership_check,
    mul,
    rational_idempotents,
    restriction,
    table_of_marks,
)
from .degree import (
    DegreeConfig,
    DegreeResult,
    Domain,
    EquivariantDegree,
    brouwer_degree,
    degree_of_cocycle_at_point,
    equivariant_degree,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupClassTable,
    generate_group,
    is_subconjugate,
    normalizer,
    orbit_decomposition,
    subgroup_classes,
)
from .liecatalog import LieCatalogEntry, almost_connected_reduce
from .linalg import RationalMatrix
from .perm import Permutation
from .polynomials import Polynomial, PolynomialMap
from .reps import (
    FixedSubspace,
    OrthogonalRep,
    check_equivariance,
    check_rep,
    fixed_subspace,
    jacobian,
    restrict_map,
)
from .schwartz import (
    Cocycle,
    CompactPerturbation,
    FredholmOperator,
    GalerkinData,
    GroupData,
    SumCocycle,
    cocycle_sum,
    cup_product,
    find_admissible_radius,
    galerkin_subspace,
    identity_cocycle,
    inverse,
    linear_ls_oracle,
    picture_convert,
    schwartz_index,
    stabilization_check,
    suspension,
    zero_cocycle,
)

__version__ = "0.1.0"

"""Exact-arithmetic toolkit for toric degenerations built from cone decompositions.

The package is organized in layers: integer/rational linear algebra
(:mod:`toricdeform.lattice`), polyhedral geometry over the rationals
(:mod:`toricdeform.polyhedral`), deformation data and the enlarged-cone
construction (:mod:`toricdeform.datum`), total-coordinate equations
(:mod:`toricdeform.cox`), polarized projective pairs
(:mod:`toricdeform.projective`), polytope mutations and their pencils
(:mod:`toricdeform.mutation`), and semigroup-level consistency oracles
(:mod:`toricdeform.oracle`).  Everything computes over ``int`` and
``fractions.Fraction``; no floats appear anywhere.
"""

from .lattice import (
    AbelianGroupPresentation,
    CokernelMap,
    ZeroVectorError,
    cokernel,
    cokernel_map,
    elementary_divisors,
    hermite_normal_form,
    integer_kernel,
    primitive,
    smith_normal_form,
)
from .polyhedral import (
    Cone,
    Fan,
    MinResult,
    Polyhedron,
    UnboundedError,
    cone_dimension,
    cone_from_generators,
    convex_hull,
    dual_cone,
    is_strongly_convex,
    lattice_points,
    membership_scaling,
    min_functional,
    minkowski_sum,
    normal_fan,
    polyhedron_equal,
)
from .datum import (
    DatumStructureError,
    DatumValidationError,
    DeformationDatum,
    TildeData,
    ValidationReport,
    build_datum,
    build_tilde,
    check_tilde_structure,
    datum_from_json,
    decompose_vertex,
    floor_min_identity,
    require_valid,
    validate_datum,
)
from .cox import (
    AliasTable,
    CoxPolynomial,
    CoxSystem,
    NegativeExponentError,
    binomials,
    boundary_monomial,
    cox_system,
    disjoint_support_regular_sequence,
    fischer_shapiro_check,
    is_homogeneous,
    pretty,
    trinomials,
)
from .projective import (
    DivisorClass,
    NonPrimitiveVertexError,
    OriginNotInteriorError,
    PolarizedToricVariety,
    ProjectiveTilde,
    classify_divisor,
    cox_comparison,
    polytope_in_M,
    projective_tilde,
)
from .mutation import (
    FanoPolytope,
    FiberReport,
    MutationDatum,
    MutationDatumError,
    MutationFamily,
    MutationFamilyError,
    OutsideVError,
    induced_boundary_datum,
    mutate,
    mutation_family,
    normalize_parameter_point,
    specialize_fiber,
    validate_fano,
    validate_mutation_datum,
)
from .oracle import (
    HilbertBasis,
    KernelWitness,
    OracleReport,
    boundary_equality_check,
    degree_zero_equality_check,
    hilbert_basis,
    interior_points,
    revalidate_witness,
)

__all__ = [
    "AbelianGroupPresentation",
    "AliasTable",
    "CokernelMap",
    "Cone",
    "CoxPolynomial",
    "CoxSystem",
    "DatumStructureError",
    "DatumValidationError",
    "DeformationDatum",
    "DivisorClass",
    "Fan",
    "FanoPolytope",
    "FiberReport",
    "HilbertBasis",
    "KernelWitness",
    "MinResult",
    "MutationDatum",
    "MutationDatumError",
    "MutationFamily",
    "MutationFamilyError",
    "NegativeExponentError",
    "NonPrimitiveVertexError",
    "OracleReport",
    "OriginNotInteriorError",
    "OutsideVError",
    "PolarizedToricVariety",
    "Polyhedron",
    "ProjectiveTilde",
    "TildeData",
    "UnboundedError",
    "ValidationReport",
    "ZeroVectorError",
    "binomials",
    "boundary_equality_check",
    "boundary_monomial",
    "build_datum",
    "build_tilde",
    "check_tilde_structure",
    "classify_divisor",
    "cokernel",
    "cokernel_map",
    "cone_dimension",
    "cone_from_generators",
    "convex_hull",
    "cox_comparison",
    "cox_system",
    "datum_from_json",
    "decompose_vertex",
    "degree_zero_equality_check",
    "disjoint_support_regular_sequence",
    "dual_cone",
    "elementary_divisors",
    "fischer_shapiro_check",
    "floor_min_identity",
    "hermite_normal_form",
    "hilbert_basis",
    "induced_boundary_datum",
    "integer_kernel",
    "interior_points",
    "is_homogeneous",
    "is_strongly_convex",
    "lattice_points",
    "membership_scaling",
    "min_functional",
    "minkowski_sum",
    "mutate",
    "mutation_family",
    "normal_fan",
    "normalize_parameter_point",
    "polyhedron_equal",
    "polytope_in_M",
    "pretty",
    "primitive",
    "projective_tilde",
    "require_valid",
    "revalidate_witness",
    "smith_normal_form",
    "specialize_fiber",
    "trinomials",
    "validate_datum",
    "validate_fano",
    "validate_mutation_datum",
]

__version__ = "0.1.0"

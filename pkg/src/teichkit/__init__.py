"""Computable models of Hopf surface classification, torus moduli, linear
torus foliations, and the atlas group of the Teichmueller stack of S3 x S1.
"""

from .algebra import (
    IntMatrix2,
    Matrix2C,
    arg_unit_interval,
    eigen2,
    order_by_modulus,
    quadratic_roots,
)
from .atlas import (
    AtlasPoint,
    AtlasStructure,
    CheckReport,
    GroupElement,
    LawResult,
    broken_structure,
    g_identity,
    g_inverse,
    g_mul,
    g_power,
    groupoid_check,
    source,
    structure_by_name,
    target,
    trivial_structure,
    z_action,
)
from .errors import (
    InvalidInputError,
    InvalidPointError,
    MismatchedFiberError,
    NotContractingError,
    NotOnCircleError,
    NotUnimodularError,
    SamePointError,
    SingularMatrixError,
    TeichkitError,
)
from .foliation import (
    Circle,
    ClosedLeaf,
    ContinuedFraction,
    DenseLine,
    LeafDescriptor,
    LeafSpace,
    NonHausdorffQuotient,
    Slope,
    cf_expand,
    leaf_descriptor,
    leaf_space,
    morita_equivalent,
    rotation_orbit,
)
from .hopf import (
    RESONANCE_MAX_ORDER,
    ContractionInput,
    Diagonal,
    HopfClass,
    Resonant,
    ResonantForm,
    biholomorphic,
    class_equal,
    classify,
    det_trace,
    is_contracting,
    resonance_order,
)
from .surd import (
    QuadraticIrrational,
    continued_fraction_expansion,
    moebius_surd,
    periodic_state_keys,
)
from .teich import (
    BasePoint,
    CurvePoint,
    TeichPoint,
    adheres,
    class_of_point,
    image,
    in_base_domain,
    neighborhood_contains,
    point_of_class,
    points_equal,
    separated,
    twin,
)
from .fixtures import json_close, run_fixtures
from .jsonio import SchemaError, canonical_dumps
from .tolerance import DEFAULT_EPS, default_eps, set_default_eps
from .tori import (
    S,
    T,
    TorusTranslation,
    lattice_reduce,
    moebius,
    reduce_fundamental_domain,
    tori_equivalent,
    translation_compose,
    translation_matrix,
    zero_translation,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasPoint",
    "AtlasStructure",
    "BasePoint",
    "CheckReport",
    "Circle",
    "ClosedLeaf",
    "ContinuedFraction",
    "ContractionInput",
    "CurvePoint",
    "DEFAULT_EPS",
    "DenseLine",
    "Diagonal",
    "GroupElement",
    "HopfClass",
    "IntMatrix2",
    "InvalidInputError",
    "InvalidPointError",
    "LawResult",
    "LeafDescriptor",
    "LeafSpace",
    "Matrix2C",
    "MismatchedFiberError",
    "NonHausdorffQuotient",
    "NotContractingError",
    "NotOnCircleError",
    "NotUnimodularError",
    "QuadraticIrrational",
    "RESONANCE_MAX_ORDER",
    "Resonant",
    "ResonantForm",
    "S",
    "SamePointError",
    "SchemaError",
    "SingularMatrixError",
    "Slope",
    "T",
    "TeichPoint",
    "TeichkitError",
    "TorusTranslation",
    "adheres",
    "arg_unit_interval",
    "biholomorphic",
    "broken_structure",
    "canonical_dumps",
    "cf_expand",
    "class_equal",
    "class_of_point",
    "classify",
    "continued_fraction_expansion",
    "default_eps",
    "det_trace",
    "eigen2",
    "g_identity",
    "g_inverse",
    "g_mul",
    "g_power",
    "groupoid_check",
    "image",
    "in_base_domain",
    "is_contracting",
    "json_close",
    "lattice_reduce",
    "leaf_descriptor",
    "leaf_space",
    "moebius",
    "moebius_surd",
    "morita_equivalent",
    "neighborhood_contains",
    "order_by_modulus",
    "periodic_state_keys",
    "point_of_class",
    "points_equal",
    "quadratic_roots",
    "reduce_fundamental_domain",
    "resonance_order",
    "rotation_orbit",
    "run_fixtures",
    "separated",
    "set_default_eps",
    "source",
    "structure_by_name",
    "target",
    "tori_equivalent",
    "translation_compose",
    "translation_matrix",
    "trivial_structure",
    "twin",
    "z_action",
    "zero_translation",
]

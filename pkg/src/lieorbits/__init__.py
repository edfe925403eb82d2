"""Exact computation of the smallest complex nilpotent orbit meeting each
non-compact real simple Lie algebra without complex structure."""

from .errors import (
    DependentBasis,
    FormNameError,
    InconsistentDiagram,
    InvalidType,
    LieOrbitsError,
    NonIntegralWeights,
    OutOfRangeParams,
    RankTooSmall,
    SingularMatrix,
    TypeMismatch,
    UnrecognizedSystem,
    ZeroVector,
)
from .orbits import (
    EquivalenceConditions,
    OrbitReport,
    black_extended_criterion,
    count_minimal_real_orbits,
    equivalence_conditions,
    min_g_dimension,
    min_g_wdd_direct,
    min_g_wdd_linear_system,
    min_meets_real_form,
    orbit_report,
    report_from_dict,
    report_to_dict,
    wdd_matches_satake,
)
from .ratmat import Rat, RatMatrix, gram_split, rat_solve
from .restricted import (
    RestrictedRootSystem,
    TypeLabel,
    classify_restricted_type,
    is_C_or_BC,
    is_hermitian,
    parity_criterion,
    restrict,
    restricted_root_system,
)
from .rootsys import (
    RootSystem,
    SimpleType,
    WeightedDynkinDiagram,
    build_root_system,
    extended_neighbors,
    min_orbit_wdd,
    orbit_dim_from_wdd,
    pairing,
)
from .satake import (
    RealFormDescriptor,
    SatakeDiagram,
    SatakeInvolution,
    build_satake,
    catalog,
    parse_form_name,
    satake_involution,
    validate_satake,
)
from .verify import run_verification

__version__ = "0.1.0"

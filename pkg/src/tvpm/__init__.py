"""Exact solvers and verifiers for Tverberg-type partitions.

Classical, rainbow (colored), and plus-minus partitions of rational point
configurations, solved and certified in exact arithmetic: a strictly
separating hyperplane for the marked face, a projective lift onto a unit
product hyperplane, an exhaustive convex-position search there, and a pull
back that turns convex weights into signed affine coefficients.  A brute
force oracle re-derives everything without the lift.
"""

from .errors import (
    DegenerateLift,
    InternalError,
    MuTooLarge,
    ParseError,
    SeparationInfeasible,
    TvpmError,
)
from .linalg import (
    LinearSolution,
    Point,
    Scalar,
    affine_dependence,
    dot,
    format_scalar,
    parse_scalar,
    solve_linear_system,
)
from .lp import (
    Constraint,
    LinearProgram,
    LpResult,
    constraint,
    lp_solve,
    satisfies,
)
from .model import (
    CLASSICAL,
    COLORED,
    Configuration,
    Hyperplane,
    PlusMinusCertificate,
    TverbergPartition,
    face_complement,
    is_prime,
    parse_certificate,
    parse_configuration,
    serialize_certificate,
    serialize_configuration,
    tverberg_point_count,
    validate_certificate_structure,
    validate_configuration,
)
from .pipeline import (
    corollary_coloring,
    plus_minus_partition,
    pull_back_coefficients,
    run_corollary,
)
from .separation import (
    LiftedConfiguration,
    lift_configuration,
    separating_hyperplane,
    trivial_hyperplane,
)
from .solver import (
    colored_tverberg_partition,
    enumerate_partitions,
    hulls_intersect,
    tverberg_partition,
    validate_partition,
)
from .verifier import (
    VerifyResult,
    certificate_for_partition,
    oracle_enumerate,
    signed_presentation,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL",
    "COLORED",
    "Configuration",
    "Constraint",
    "DegenerateLift",
    "Hyperplane",
    "InternalError",
    "LiftedConfiguration",
    "LinearProgram",
    "LinearSolution",
    "LpResult",
    "MuTooLarge",
    "ParseError",
    "PlusMinusCertificate",
    "Point",
    "Scalar",
    "SeparationInfeasible",
    "TvpmError",
    "TverbergPartition",
    "VerifyResult",
    "affine_dependence",
    "certificate_for_partition",
    "colored_tverberg_partition",
    "constraint",
    "corollary_coloring",
    "dot",
    "enumerate_partitions",
    "face_complement",
    "format_scalar",
    "hulls_intersect",
    "is_prime",
    "lift_configuration",
    "lp_solve",
    "oracle_enumerate",
    "parse_certificate",
    "parse_configuration",
    "parse_scalar",
    "plus_minus_partition",
    "pull_back_coefficients",
    "run_corollary",
    "satisfies",
    "separating_hyperplane",
    "serialize_certificate",
    "serialize_configuration",
    "signed_presentation",
    "solve_linear_system",
    "trivial_hyperplane",
    "tverberg_partition",
    "tverberg_point_count",
    "validate_certificate_structure",
    "validate_configuration",
    "validate_partition",
    "verify_certificate",
]

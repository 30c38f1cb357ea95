"""Exact bifurcation-index arithmetic for symmetric elliptic systems on spheres.

Given the signature of a system on S^{N-1} (sphere dimension N, sign
coefficients a_i, degeneracy coefficients b_i, one or two critical orbits),
this package computes the candidate bifurcation level set, the bifurcation
index at every level in the Euler ring of SO(2) by independent routes, and
classifies each bifurcating continuum of solutions as unbounded or
structure-constrained. All arithmetic is exact (integers and rationals).
"""

__version__ = "0.1.0"

from .bifindex import BifurcationIndex, all_routes, bif, bif_closed, bif_general, bif_ring
from .classify import (
    IntersectionPattern,
    Verdict,
    enumerate_bounded_patterns,
    index_table,
    search_bounded_patterns,
    theta_sum,
    verdict,
    verify_theorems,
)
from .degree import deg_identity, deg_neg_id
from .errors import (
    AssertionFailure,
    DomainError,
    InvariantViolation,
    LevelNotInLambda,
    MalformedInput,
    MissingDirection,
    NegativeMultiplicity,
    NotInvertible,
    RouteMismatch,
    SpherebifError,
    TruncationTooSmall,
)
from .euler import EulerRingElement, inverse, is_invertible, smul, star, unit, zero
from .reps import (
    RepDecomposition,
    cumulative_decomp,
    harmonic_decomp,
    harmonic_multiplicity,
    oracle_enumerate,
    rep_scale,
    rep_sub,
    rep_sum,
)
from .spectrum import (
    Level,
    SpectrumEntry,
    beta,
    kernel_dim_excess,
    lambda_set,
    minus_level,
    parse_level,
    plus_level,
    spectrum_at,
    zero_level,
)
from .system import DerivedCounts, SystemSpec, derive_counts, parse_spec

__all__ = [
    "__version__",
    "AssertionFailure",
    "BifurcationIndex",
    "DerivedCounts",
    "DomainError",
    "EulerRingElement",
    "IntersectionPattern",
    "InvariantViolation",
    "Level",
    "LevelNotInLambda",
    "MalformedInput",
    "MissingDirection",
    "NegativeMultiplicity",
    "NotInvertible",
    "RepDecomposition",
    "RouteMismatch",
    "SpectrumEntry",
    "SpherebifError",
    "SystemSpec",
    "TruncationTooSmall",
    "Verdict",
    "all_routes",
    "beta",
    "bif",
    "bif_closed",
    "bif_general",
    "bif_ring",
    "cumulative_decomp",
    "deg_identity",
    "deg_neg_id",
    "derive_counts",
    "enumerate_bounded_patterns",
    "harmonic_decomp",
    "harmonic_multiplicity",
    "index_table",
    "inverse",
    "is_invertible",
    "kernel_dim_excess",
    "lambda_set",
    "minus_level",
    "oracle_enumerate",
    "parse_level",
    "parse_spec",
    "plus_level",
    "rep_scale",
    "rep_sub",
    "rep_sum",
    "search_bounded_patterns",
    "smul",
    "spectrum_at",
    "star",
    "theta_sum",
    "unit",
    "verdict",
    "verify_theorems",
    "zero",
    "zero_level",
]

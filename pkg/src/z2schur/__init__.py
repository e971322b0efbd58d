"""Schur rings over Z_2^n with circulant structure: weight-class
arithmetic, complete S-sets, orbit actions under rotation, reversal and
decimation, periodic autocorrelation, and Hadamard matrix construction,
verification and exhaustive search at desk scale."""

from .errors import (
    InvalidCore,
    InvalidCoreOrder,
    InvalidLength,
    InvalidWeight,
    LengthMismatch,
    NotCoprime,
    NotHadamard,
    RingAxiomViolation,
    ScaleExceeded,
    TheoremViolation,
    Z2SchurError,
)
from .sequences import (
    BinarySequence,
    all_sequences,
    concat_blocks,
    decimate,
    divisors,
    make_sequence,
    negate,
    product,
    reverse,
    rotate,
    units,
    weight,
)
from .weight_ring import (
    QuantityVector,
    WeightClass,
    WeightClassSet,
    class_members,
    class_product,
    class_size,
    even_odd_unions,
    is_sgroup,
    structure_constant_closed,
    structure_constant_oracle,
    verify_ring,
)
from .ssets import (
    CompleteSSet,
    complete_maximal,
    count_theorem_checks,
    find_complete_ssets,
    maximal_target_weights,
    member_interval,
    predicted_profile,
)
from .orbits import (
    GROUPS,
    Orbit,
    burnside_count,
    canonical_rep,
    census,
    classify,
    cyclic_period,
    enumerate_orbits,
    fd_partition,
    fd_partition_check,
    invariance_check,
    necklace_count,
    orbit_members,
    orbit_product_decomposition,
    spartition_axiom_check,
    square_freeness_check,
    sym_decomposition,
)
from .autocorr import (
    AutocorrVector,
    cross_sum_identity,
    cross_theta,
    decimation_permutes,
    flat_offpeak,
    periodic_autocorrelation,
    periodic_correlation,
    random_identity_trials,
    sum_identity,
    theta,
    verify_identities,
)
from .hadamard import (
    BUILTIN_H12,
    ContainmentReport,
    SearchResult,
    SignMatrix,
    StructureVerdict,
    border_core,
    circulant,
    circulant_feasible_weights,
    core_partition_verdict,
    delta_invariance_of_core,
    exhaustive_core_partition_search,
    exhaustive_structured_search,
    is_hadamard,
    normalize_into_complete,
    paley_core,
    partition_parity_verdict,
    search_circulant_hadamard,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrVector",
    "BUILTIN_H12",
    "BinarySequence",
    "CompleteSSet",
    "ContainmentReport",
    "GROUPS",
    "InvalidCore",
    "InvalidCoreOrder",
    "InvalidLength",
    "InvalidWeight",
    "LengthMismatch",
    "NotCoprime",
    "NotHadamard",
    "Orbit",
    "QuantityVector",
    "RingAxiomViolation",
    "ScaleExceeded",
    "SearchResult",
    "SignMatrix",
    "StructureVerdict",
    "TheoremViolation",
    "WeightClass",
    "WeightClassSet",
    "Z2SchurError",
    "all_sequences",
    "border_core",
    "burnside_count",
    "canonical_rep",
    "census",
    "circulant",
    "circulant_feasible_weights",
    "class_members",
    "class_product",
    "class_size",
    "classify",
    "complete_maximal",
    "concat_blocks",
    "core_partition_verdict",
    "count_theorem_checks",
    "cross_sum_identity",
    "cross_theta",
    "cyclic_period",
    "decimate",
    "decimation_permutes",
    "delta_invariance_of_core",
    "divisors",
    "enumerate_orbits",
    "even_odd_unions",
    "exhaustive_core_partition_search",
    "exhaustive_structured_search",
    "fd_partition",
    "fd_partition_check",
    "find_complete_ssets",
    "flat_offpeak",
    "invariance_check",
    "is_hadamard",
    "is_sgroup",
    "make_sequence",
    "maximal_target_weights",
    "member_interval",
    "necklace_count",
    "negate",
    "normalize_into_complete",
    "orbit_members",
    "orbit_product_decomposition",
    "paley_core",
    "partition_parity_verdict",
    "periodic_autocorrelation",
    "periodic_correlation",
    "predicted_profile",
    "product",
    "random_identity_trials",
    "reverse",
    "rotate",
    "search_circulant_hadamard",
    "spartition_axiom_check",
    "square_freeness_check",
    "structure_constant_closed",
    "structure_constant_oracle",
    "sum_identity",
    "sym_decomposition",
    "theta",
    "units",
    "verify_identities",
    "verify_ring",
    "weight",
]

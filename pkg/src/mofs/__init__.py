"""Mutually orthogonal frequency squares: construction, verification,
enumeration, and parity-based maximality certificates."""

from .core import (
    FSquare,
    IndicatorSquare,
    MofsError,
    Params,
    all_ones,
    indicator,
    indicators,
    inner,
    make_fsquare,
    reconstruct,
)
from .verify import (
    CompletenessReport,
    MofsSet,
    NotOrthogonal,
    UpperBound,
    completeness_structure,
    orthogonal,
    superposition_counts,
    upper_bound,
    verify_mofs,
)
from .maximality import (
    FullRelationCertificate,
    MaximalityVerdict,
    ParityMatrix,
    ParityReport,
    detect_full_relation,
    maximality_verdict,
    parity_matrix,
    parity_report,
)
from .construct import (
    FieldTable,
    HadamardMatrix,
    construct_federer,
    construct_prime_power,
    field_build,
    hadamard,
)
from .search import (
    InfeasibleSizeGuard,
    SearchConfig,
    count_fsquares,
    enumerate_fsquares,
    exhaustive_maximality,
    extensions,
    grow_maximal,
    random_fsquare,
)
from .fileformat import decode, encode

__all__ = [
    "CompletenessReport",
    "FSquare",
    "FieldTable",
    "FullRelationCertificate",
    "HadamardMatrix",
    "IndicatorSquare",
    "InfeasibleSizeGuard",
    "MaximalityVerdict",
    "MofsError",
    "MofsSet",
    "NotOrthogonal",
    "ParityMatrix",
    "ParityReport",
    "Params",
    "SearchConfig",
    "UpperBound",
    "all_ones",
    "completeness_structure",
    "construct_federer",
    "construct_prime_power",
    "count_fsquares",
    "decode",
    "detect_full_relation",
    "encode",
    "enumerate_fsquares",
    "exhaustive_maximality",
    "extensions",
    "field_build",
    "grow_maximal",
    "hadamard",
    "indicator",
    "indicators",
    "inner",
    "make_fsquare",
    "maximality_verdict",
    "orthogonal",
    "parity_matrix",
    "parity_report",
    "random_fsquare",
    "reconstruct",
    "superposition_counts",
    "upper_bound",
    "verify_mofs",
]

"""Exact maxima of the sum of squared vertex degrees over graph classes (v, e)."""

from .density import DensityReport, density, qs_dominant
from .errors import (
    CapExceededError,
    DegsqError,
    DenominatorZeroError,
    EdgeOutOfRangeError,
    NotStrictlyDecreasingError,
    PartOutOfRangeError,
    UnsupportedPError,
    VertexCountTooSmallError,
)
from .extremal import (
    QCDecomposition,
    QSDecomposition,
    max_line_graph_edges,
    max_p2,
    qc_decompose,
    qs_decompose,
    quasi_complete,
    quasi_star,
    value_C,
    value_S,
)
from .optimal import OptimalPartition, OptimalReport, candidates, optimal_count, optimal_set
from .oracle import (
    OracleReport,
    VerifyReport,
    brute_max_graphs,
    brute_max_partitions,
    enum_distinct_partitions,
    verify_range,
)
from .partitions import (
    ThresholdGraph,
    binom2,
    complement_partition,
    degree_sequence,
    diagonal_sequence,
    make_partition,
    p2_from_degrees,
    p2_value,
)
from .pell import (
    FamilyMember,
    PellSolution,
    family_equality_e0,
    family_four,
    family_q0_zero,
    family_three,
    pell_solutions,
    verify_k_is_k0,
)
from .signs import (
    MidpointParams,
    Segment,
    SignProfile,
    bound_L,
    bound_U,
    classify,
    crossing_audit,
    diff,
    midpoint_params,
    profile,
    q0,
    r0,
)

__all__ = [name for name in dir() if not name.startswith("_")]

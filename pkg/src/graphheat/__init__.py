"""Heat kernels on finite graphs.

Exact short-time Taylor data (rational arithmetic all the way down), two
independent kernel engines (spectral synthesis and nonnegative
uniformization), geodesic counting, and recovery of distances and geodesic
counts from kernel samples alone.
"""

from .errors import (
    ConvergenceError,
    DegenerateGraphError,
    DuplicateEdgeError,
    EdgeListError,
    GraphHeatError,
    NoConvergence,
    ParseError,
    PositivityFloor,
    SelfLoopError,
    UnreachableError,
    WeightError,
)
from .graphs import (
    DistanceProfile,
    Graph,
    adjacency_apply,
    adjacency_power_entry,
    bfs_profile,
    is_bipartite,
    parse_edge_list,
)
from .kernels import (
    DEFAULT_EPS,
    HeatKernel,
    kernel_entry,
    kernel_spectral,
    kernel_uniformization,
)
from .series import (
    SeriesPrefix,
    kernel_taylor_coefficient,
    laplacian_apply,
    leading_order,
    series_prefix,
)
from .spectral import (
    KirchhoffMatrix,
    SpectralDecomposition,
    eigendecompose,
    kirchhoff_matrix,
    spectral_path_identity,
)
from .varadhan import (
    COUNT_TOL,
    EXPONENT_TOL,
    POSITIVITY_FLOOR,
    STABLE_ROUNDS,
    DistanceEstimate,
    VaradhanReport,
    VerificationSummary,
    estimate_pair,
    spectral_sampler,
    uniformization_sampler,
    verify_graph,
    verify_pair,
    weighted_leading,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DegenerateGraphError",
    "DuplicateEdgeError",
    "EdgeListError",
    "GraphHeatError",
    "NoConvergence",
    "ParseError",
    "PositivityFloor",
    "SelfLoopError",
    "UnreachableError",
    "WeightError",
    "DistanceProfile",
    "Graph",
    "adjacency_apply",
    "adjacency_power_entry",
    "bfs_profile",
    "is_bipartite",
    "parse_edge_list",
    "DEFAULT_EPS",
    "HeatKernel",
    "kernel_entry",
    "kernel_spectral",
    "kernel_uniformization",
    "SeriesPrefix",
    "kernel_taylor_coefficient",
    "laplacian_apply",
    "leading_order",
    "series_prefix",
    "KirchhoffMatrix",
    "SpectralDecomposition",
    "eigendecompose",
    "kirchhoff_matrix",
    "spectral_path_identity",
    "COUNT_TOL",
    "EXPONENT_TOL",
    "POSITIVITY_FLOOR",
    "STABLE_ROUNDS",
    "DistanceEstimate",
    "VaradhanReport",
    "VerificationSummary",
    "estimate_pair",
    "spectral_sampler",
    "uniformization_sampler",
    "verify_graph",
    "verify_pair",
    "weighted_leading",
]

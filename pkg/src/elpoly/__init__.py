"""Edge-length polytope toolkit.

Tools for circulant instances on n cyclically arranged vertices: edge-length
vectors of Hamiltonian paths and cycles, divisor feasibility constraints,
greedy minimum-cost path construction and its encoding-sequence combinatorics
for n = 2**k, exhaustive cycle-vector enumeration for small n, and an exact
rational engine certifying vertices and facets of the resulting polytopes.
"""

from .bhr import BhrVerdict, check_bhr, count_realizable_multisets, path_multisets, realizable_path
from .blg import (
    SKIP,
    EncodingSequence,
    VertexPath,
    build_blg_cycle,
    build_blg_path,
    count_blg,
    crude_lower_bound,
    encoding_to_costs,
    encoding_to_permutation,
    encoding_to_vector,
    enumerate_encodings,
    extend_to_cycle,
    extended_vector,
    lower_bound_vertices,
    validate_encoding,
)
from .circulant import (
    CirculantCosts,
    CirculantGraph,
    EdgeLengthVector,
    InstanceParams,
    StripePartition,
    component_count,
    cycle_edge_vector,
    edge_length,
    is_hamiltonian_lengthset,
    path_edge_vector,
    stripe_partition,
)
from .enumeration import (
    VectorSet,
    contains_vector,
    cycle_count,
    enumerate_cycle_vectors,
)
from .errors import (
    ElpolyError,
    ExtensionUndefinedError,
    InvalidEdgeError,
    MembershipError,
    ResourceLimitError,
    UnsupportedModulusError,
)
from .fixtures import FixtureTable, load_fixtures
from .gseq import CostPermutation, GSequence, blg_edge_multiset, g_sequence, min_path_cost
from .hull import (
    HullSummary,
    PointSet,
    VertexCountPrediction,
    certify_unique_optimum,
    certify_vertex,
    enumerate_facets,
    enumerate_vertices,
    predicted_vertex_count,
)

__version__ = "0.1.0"

__all__ = [
    "BhrVerdict",
    "CirculantCosts",
    "CirculantGraph",
    "CostPermutation",
    "EdgeLengthVector",
    "ElpolyError",
    "EncodingSequence",
    "ExtensionUndefinedError",
    "FixtureTable",
    "GSequence",
    "HullSummary",
    "InstanceParams",
    "InvalidEdgeError",
    "MembershipError",
    "PointSet",
    "ResourceLimitError",
    "SKIP",
    "StripePartition",
    "UnsupportedModulusError",
    "VectorSet",
    "VertexCountPrediction",
    "VertexPath",
    "blg_edge_multiset",
    "build_blg_cycle",
    "build_blg_path",
    "certify_unique_optimum",
    "certify_vertex",
    "check_bhr",
    "component_count",
    "contains_vector",
    "count_blg",
    "count_realizable_multisets",
    "crude_lower_bound",
    "cycle_count",
    "cycle_edge_vector",
    "edge_length",
    "encoding_to_costs",
    "encoding_to_permutation",
    "encoding_to_vector",
    "enumerate_cycle_vectors",
    "enumerate_encodings",
    "enumerate_facets",
    "enumerate_vertices",
    "extend_to_cycle",
    "extended_vector",
    "g_sequence",
    "is_hamiltonian_lengthset",
    "load_fixtures",
    "lower_bound_vertices",
    "min_path_cost",
    "path_edge_vector",
    "path_multisets",
    "predicted_vertex_count",
    "realizable_path",
    "stripe_partition",
    "validate_encoding",
]

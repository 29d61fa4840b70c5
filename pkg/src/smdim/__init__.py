"""Strong metric dimension of graphs and of Cartesian and direct products."""

from .catalog import (
    FORMULAS,
    STRUCTURAL_CHECKS,
    Limits,
    VerificationReport,
    formula_sdim,
    verify,
    verify_formula,
    verify_structural,
)
from .cover import CoverWitness, independence_number, vertex_cover_number
from .errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    OutOfRangeError,
    ParseError,
    SmdError,
    TooLargeError,
    TrivialGraphError,
)
from .families import (
    FamilySpec,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    hamming,
    hypercube,
    make_family,
    parse_family_spec,
    path,
    star,
    tree_from_parents,
)
from .graph import (
    Graph,
    cartesian_product,
    connected_components,
    direct_product,
    is_bipartite,
    is_connected,
)
from .io import encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .matching import Matching, has_perfect_matching, maximum_matching
from .metric import (
    DistanceMatrix,
    all_pairs_distances,
    boundary,
    diameter,
    in_interval,
    is_distance_regular,
    is_maximally_distant,
    is_two_antipodal,
    mmd_pairs,
    simplicial_vertices,
    strongly_resolves,
)
from .sdim import (
    BoundsResult,
    SdimResult,
    is_strong_resolving_set,
    product_sdim_bounds,
    sdim_bounds,
    sdim_oracle,
    strong_metric_dimension,
)
from .srgraph import (
    sr_direct_complete_identity_check,
    sr_product_identity_check,
    strong_resolving_graph,
)
from .structure import is_hamiltonian, is_vertex_transitive

__version__ = "0.1.0"

__all__ = [
    "BoundsResult",
    "CoverWitness",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "FORMULAS",
    "FamilySpec",
    "Graph",
    "InvalidParameterError",
    "Limits",
    "Matching",
    "OutOfRangeError",
    "ParseError",
    "STRUCTURAL_CHECKS",
    "SdimResult",
    "SmdError",
    "TooLargeError",
    "TrivialGraphError",
    "VerificationReport",
    "all_pairs_distances",
    "boundary",
    "cartesian_product",
    "circulant",
    "complete",
    "complete_bipartite",
    "connected_components",
    "cycle",
    "diameter",
    "direct_product",
    "encode_graph6",
    "format_edge_list",
    "formula_sdim",
    "hamming",
    "has_perfect_matching",
    "hypercube",
    "in_interval",
    "independence_number",
    "is_bipartite",
    "is_connected",
    "is_distance_regular",
    "is_hamiltonian",
    "is_maximally_distant",
    "is_strong_resolving_set",
    "is_two_antipodal",
    "is_vertex_transitive",
    "make_family",
    "maximum_matching",
    "mmd_pairs",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "path",
    "product_sdim_bounds",
    "sdim_bounds",
    "sdim_oracle",
    "simplicial_vertices",
    "sr_direct_complete_identity_check",
    "sr_product_identity_check",
    "star",
    "strong_metric_dimension",
    "strong_resolving_graph",
    "strongly_resolves",
    "tree_from_parents",
    "verify",
    "verify_formula",
    "verify_structural",
    "vertex_cover_number",
]

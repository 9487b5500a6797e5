"""Social influence matrices, total-effect centrality and PageRank."""

from .centrality import (
    CentralityVector,
    EquivalenceReport,
    PageRankForm,
    Scale,
    centrality,
    centrality_direct,
    centrality_fixed_point,
    dense_rank,
    pagerank,
    total_effect_centrality,
    verify_equivalence,
)
from .errors import (
    DanglingNode,
    DegenerateSize,
    DimensionMismatch,
    EmptyGraph,
    FJRankError,
    InputError,
    IterationCapExceeded,
    NumericalError,
    NumericalFailure,
    ParseError,
    ProblemTooLarge,
)
from .graph import (
    AdjacencyMatrix,
    DanglingPolicy,
    RowStochasticMatrix,
    SelfLoopWarning,
    build_adjacency,
    format_dense_matrix,
    out_degrees,
    parse_dense_matrix,
    parse_edge_list,
    random_digraph,
    read_graph,
    relabel,
    row_normalize,
)
from .influence import (
    DEFAULT_ALPHA,
    InfluenceMatrix,
    Method,
    SolverConfig,
    check_alpha,
    influence_direct,
    influence_matrix,
    influence_series,
    iter_partial_sums,
    series_partial_sum,
    series_terms,
)

__version__ = "0.1.0"

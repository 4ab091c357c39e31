# The objects here form the public API of contagionlib and may be imported directly.
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    compute_measure,
    correlation_matrix,
    degree_centrality,
    eigenvector_centrality,
    regular_separation_search,
    spearman_correlation,
    spread_centrality,
)
from .epidemic import (
    BoundsReport,
    EpidemicParams,
    LingerReport,
    Outcome,
    critical_birth_rate,
    critical_death_rate,
    eigen_bounds,
    epidemic_threshold,
    lingering_conditions,
    predict_outcome,
)
from .exceptions import (
    ContagionError,
    ConvergenceError,
    DisconnectedGraphError,
    GraphError,
    GraphParseError,
    InvalidGraphSpecError,
    InvalidParameterError,
    ThresholdUndefinedError,
    UndefinedCorrelationError,
    VertexRangeError,
)
from .families import NamedGraphSpec, build_named, parse_graph_spec
from .graph import Graph, degree_stats, delete_vertex, delete_vertices, induced_subgraph
from .parsers import ParseResult, format_edge_list, parse_edge_list, parse_gml
from .simulation import EpidemicCurve, SimulationConfig, seed_deviation, simulate, tail_mean
from .spectral import EigenSettings, SpectralResult, largest_eigenvalue, vertex_deck
from .vaccination import (
    ComparisonSummary,
    Method,
    VaccinationReport,
    compare_methods,
    vaccinate_batch,
    vaccinate_greedy,
)
from .vectors import CentralityVector, Measure

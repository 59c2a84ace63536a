"""Strong alliance polynomials of simple graphs, computed by exact enumeration."""

from .alliance import is_defensive_alliance, is_strong_alliance_connected, strong_alliance_number
from .analysis import (
    AllianceReport,
    SequenceVerdict,
    build_report,
    check_empty_characterization,
    sequence_verdict,
)
from .enumerator import (
    EnumerationStats,
    compute_polynomial,
    compute_polynomial_oracle,
    count_connected_subsets,
    enumerate_alliances,
)
from .errors import AllianceError, BudgetExceeded, GraphFormatError, GraphSizeError, PolynomialFormatError
from .families import FamilySpec, family_graph, family_polynomial
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    degree_in_set,
    delete_edges,
    disjoint_union,
    is_connected_subset,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .polynomial import (
    AlliancePolynomial,
    evaluate_at_one,
    format_poly,
    min_support,
    parse_poly,
    poly_add,
    poly_mul,
)

__version__ = "0.1.0"

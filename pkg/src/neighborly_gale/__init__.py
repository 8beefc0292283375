"""Reduced Gale diagrams of d-polytopes with d+3 vertices.

Cofacet counting, neighborliness predicates, an exhaustive symmetry-broken
search for the minimum of facets minus vertices, and closed-form facet
bounds.
"""

from .bounds import (
    BOUND_REGISTRY,
    BoundReport,
    FVector,
    binomial,
    corollary2_bound,
    d_k,
    euler_check,
    evaluate_bound,
    fj_lower_bound,
    g_vector_kneighborly,
    gmatrix_entry,
    neighborly_facets,
    simplicial_lbt,
    smallvert_bound,
)
from .constructions import (
    VFPair,
    build_example1,
    build_example2,
    build_example3,
    join,
    pyramid,
    recursive_family,
)
from .diagram import (
    Cofacet,
    GaleDiagram,
    ValidationReport,
    canonical_form,
    count_cofacets,
    displace,
    is_k_neighborly,
    is_minimal,
    list_cofacets,
    reduce,
    semicircle_sums,
    validate,
)
from .errors import (
    CounterexampleError,
    DegenerateDiagramError,
    DiagramError,
    InexactDivisionError,
    InvalidMoveError,
    OracleSizeError,
    ParameterError,
)
from .oracle import oracle_count_cofacets, triangle_contains_origin
from .search import (
    SearchConfig,
    SearchResult,
    SearchStats,
    delta3_closed_form,
    enumerate_diagrams,
    find_delta3,
    verify_theorem1,
)

__version__ = "0.1.0"

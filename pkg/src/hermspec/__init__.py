"""Hermitian spectra of mixed graphs.

Exact classification of connected mixed graphs whose Hermitian adjacency
matrix keeps its smallest eigenvalue above the algebraic thresholds
-sqrt(2) and -(1+sqrt5)/2, with switching-equivalence machinery, exact
eigenvalue comparisons in quadratic number fields, and a brute-force
census that verifies the structural classifier against exact arithmetic.
"""

from .catalog import Catalog, CatalogRecord, load_builtin
from .classify import (
    Certificate,
    Family,
    KnstMatch,
    NotKnst,
    QuadClass,
    QuadTag,
    RejectWitness,
    Sqrt2Verdict,
    TriangleType,
    classify_sqrt2,
    classify_threshold,
    cograph_join_split,
    find_forbidden_quadrangle,
    find_forbidden_triangle,
    find_induced,
    quad_class,
    recognize_knst,
    triangle_type,
    underlying_family,
)
from .graphs import (
    EdgeKind,
    HermitianMatrix,
    MixedGraph,
    build,
    coalescence,
    complete_graph,
    connected_components,
    converse,
    cycle_graph,
    decode,
    disjoint_union,
    hermitian_matrix,
    induced,
    is_connected,
    join,
    make_knst,
    neighbor_partition,
    path_graph,
    star_graph,
    underlying_graph,
)
from .mgfile import MgParseError, parse_mgfile, serialize_mgfile
from .polynomials import IntPolynomial, Trichotomy, compare_min_root, count_roots_at_most
from .quadratic import NEG_GOLDEN, NEG_SQRT2, NEG_SQRT3, QuadraticNumber
from .spectra import (
    EquitablePartition,
    SpectralSummary,
    char_poly,
    compare_lambda_min,
    eigenvalues,
    embed_real,
    f_cubic,
    interlacing_holds,
    phi_cubic,
    quotient_contained_exactly,
    validate_equitable,
)
from .switching import (
    BadTriangleError,
    ChordlessCycle,
    Cut,
    NotChordalError,
    SwitchDiagonal,
    apply_switch,
    coincident_cuts,
    normalize_chordal,
    perfect_elimination_ordering,
    random_switch,
    switching_equivalent,
    x_switch,
)

__version__ = "0.1.0"

__all__ = [
    "BadTriangleError",
    "Catalog",
    "CatalogRecord",
    "Certificate",
    "ChordlessCycle",
    "Cut",
    "EdgeKind",
    "EquitablePartition",
    "Family",
    "HermitianMatrix",
    "IntPolynomial",
    "KnstMatch",
    "MgParseError",
    "MixedGraph",
    "NEG_GOLDEN",
    "NEG_SQRT2",
    "NEG_SQRT3",
    "NotChordalError",
    "NotKnst",
    "QuadClass",
    "QuadTag",
    "QuadraticNumber",
    "RejectWitness",
    "SpectralSummary",
    "Sqrt2Verdict",
    "SwitchDiagonal",
    "TriangleType",
    "Trichotomy",
    "apply_switch",
    "build",
    "char_poly",
    "classify_sqrt2",
    "classify_threshold",
    "coalescence",
    "cograph_join_split",
    "coincident_cuts",
    "compare_lambda_min",
    "compare_min_root",
    "complete_graph",
    "connected_components",
    "converse",
    "count_roots_at_most",
    "cycle_graph",
    "decode",
    "disjoint_union",
    "eigenvalues",
    "embed_real",
    "f_cubic",
    "find_forbidden_quadrangle",
    "find_forbidden_triangle",
    "find_induced",
    "hermitian_matrix",
    "induced",
    "interlacing_holds",
    "is_connected",
    "join",
    "load_builtin",
    "make_knst",
    "neighbor_partition",
    "normalize_chordal",
    "parse_mgfile",
    "path_graph",
    "perfect_elimination_ordering",
    "phi_cubic",
    "quad_class",
    "quotient_contained_exactly",
    "random_switch",
    "recognize_knst",
    "serialize_mgfile",
    "star_graph",
    "switching_equivalent",
    "triangle_type",
    "underlying_family",
    "underlying_graph",
    "validate_equitable",
    "x_switch",
]

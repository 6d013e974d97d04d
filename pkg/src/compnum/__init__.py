"""Acyclic-digraph witnesses for competition-number upper bounds.

The package certifies k(G) <= |added| by building an acyclic digraph whose
competition graph is G plus isolated added vertices, for graphs whose
holes are pairwise edge-disjoint and that carry at most one maximal clique
bigger than an edge.  An exhaustive oracle pins exact values at desk scale
for cross-checking.
"""

from .builders import (
    BuilderOptions,
    FreshNames,
    auto_witness,
    chordal_witness,
    paste,
    theorem1_witness,
    theorem2_witness,
    triangle_free_witness,
)
from .competition import (
    ORACLE_DEFAULT_BUDGET,
    ORACLE_VERTEX_CAP,
    OracleResult,
    VerificationReport,
    Witness,
    competition_graph,
    exact_competition_number,
    fresh_names,
    is_acyclic,
    verify_witness,
)
from .errors import (
    BudgetExceededError,
    CompnumError,
    ConstructionError,
    DuplicateEdgeError,
    DuplicateVertexError,
    GenerationError,
    GraphValidationError,
    HypothesisAnomaly,
    LemmaCondViolation,
    PreconditionError,
    SelfLoopError,
    UndeclaredEndpointError,
    UnsupportedClassError,
    VertexTypeError,
)
from .generators import (
    FamilySpec,
    default_family_spec,
    gen_family,
    gen_flower,
    gen_triangle_free_random,
)
from .graphs import (
    Cycle,
    Digraph,
    Graph,
    Path,
    build_graph,
    bridges,
    canonical_edge,
    connected_components,
    cut_vertices,
    cycle_key,
    edge_key,
    is_connected,
    is_cut_edge,
    shortest_path_avoiding,
    vertex_key,
)
from .structure import (
    DEFAULT_HOLE_CAP,
    DEFAULT_SEARCH_BUDGET,
    READINGS,
    WINDOW_ABOVE,
    WINDOW_DEGENERATE,
    WINDOW_EQ_H_PLUS_ONE,
    WINDOW_EQ_TWO,
    WINDOW_INTERIOR,
    AvoidanceGraph,
    ChordedCycleAnalysis,
    Clique,
    Hole,
    HypothesisReport,
    analyze_chorded_cycle,
    build_avoidance_graph,
    clique_key,
    edge_removal_hole_report,
    enumerate_holes,
    enumerate_maximal_cliques,
    hole_key,
    is_chordal,
    is_chordless_cycle,
    is_hole_by_clique_criterion,
    k_avoiding_path_exists,
    select_clique_vertex,
    validate_hypotheses,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidanceGraph",
    "DEFAULT_HOLE_CAP",
    "DEFAULT_SEARCH_BUDGET",
    "READINGS",
    "WINDOW_ABOVE",
    "WINDOW_DEGENERATE",
    "WINDOW_EQ_H_PLUS_ONE",
    "WINDOW_EQ_TWO",
    "WINDOW_INTERIOR",
    "BudgetExceededError",
    "BuilderOptions",
    "ChordedCycleAnalysis",
    "Clique",
    "CompnumError",
    "ConstructionError",
    "Cycle",
    "Digraph",
    "DuplicateEdgeError",
    "DuplicateVertexError",
    "FamilySpec",
    "FreshNames",
    "GenerationError",
    "Graph",
    "GraphValidationError",
    "Hole",
    "HypothesisAnomaly",
    "HypothesisReport",
    "LemmaCondViolation",
    "ORACLE_DEFAULT_BUDGET",
    "ORACLE_VERTEX_CAP",
    "OracleResult",
    "Path",
    "PreconditionError",
    "SelfLoopError",
    "UndeclaredEndpointError",
    "UnsupportedClassError",
    "VerificationReport",
    "VertexTypeError",
    "Witness",
    "analyze_chorded_cycle",
    "auto_witness",
    "bridges",
    "build_avoidance_graph",
    "build_graph",
    "canonical_edge",
    "chordal_witness",
    "clique_key",
    "competition_graph",
    "connected_components",
    "cut_vertices",
    "cycle_key",
    "default_family_spec",
    "edge_key",
    "edge_removal_hole_report",
    "enumerate_holes",
    "enumerate_maximal_cliques",
    "exact_competition_number",
    "fresh_names",
    "gen_family",
    "gen_flower",
    "gen_triangle_free_random",
    "hole_key",
    "is_acyclic",
    "is_chordal",
    "is_chordless_cycle",
    "is_connected",
    "is_cut_edge",
    "is_hole_by_clique_criterion",
    "k_avoiding_path_exists",
    "paste",
    "select_clique_vertex",
    "shortest_path_avoiding",
    "theorem1_witness",
    "theorem2_witness",
    "triangle_free_witness",
    "validate_hypotheses",
    "verify_witness",
    "vertex_key",
]

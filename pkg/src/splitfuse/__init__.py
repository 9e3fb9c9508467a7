"""Graph-state preparation by split decomposition and fusion.

The package decomposes a target graph into its split tree of quotient
graphs, synthesises preparation plans (naive CZ schedules, split-fuse plans
and hybrids for graphs with prime quotients), and checks plans and
local-complementation identities with a stabilizer tableau.
"""

from __future__ import annotations

from splitfuse.coloring import EdgeColoring, edge_color
from splitfuse.exceptions import InvalidInputError, PreconditionError, ResourceLimitError, SplitFuseError
from splitfuse.families import (
    FamilySpec,
    build,
    clique_star,
    complete,
    complete_bipartite,
    complete_multipartite,
    multi_leaf_repeater,
    random_dh,
    random_er_connected,
    repeater,
    star,
)
from splitfuse.graph import (
    Graph,
    LcSequence,
    LcStep,
    MeasurementOutcome,
    apply_sequence,
    delete_vertex,
    edge_pivot,
    fuse_type1,
    fuse_type2,
    graph_stats,
    local_complement,
    measure_pauli,
)
from splitfuse.heuristic import HeuristicResult, enumerate_triangle_vertices, triangle_greedy
from splitfuse.orbit import (
    BipartiteSymmetryClass,
    OrbitReport,
    bipartite_classify,
    bipartite_transform,
    enumerate_orbit,
    min_degree_formula,
    min_edges_formula,
    multileaf_repeater_equivalent,
    oracle_min_stats,
    orbit_size_bipartite,
    orbit_size_cliquestar,
    orbit_size_multipartite,
    select_min_edges,
)
from splitfuse.planner import (
    PlanOp,
    PreparationPlan,
    ResourceSummary,
    compare_strategies,
    plan_generalized,
    plan_heuristic,
    plan_naive,
    plan_split_fuse,
    resource_formulas,
)
from splitfuse.split import Qasst, decompose, find_splits_bruteforce, is_distance_hereditary, reconstruct
from splitfuse.stabilizer import (
    CliffordGate,
    Tableau,
    apply_gate,
    fuse_type2_tableau,
    graph_state_tableau,
    measure_pauli_tableau,
    states_equal,
)
from splitfuse.verify import diagnose_plan, verify_plan

__version__ = "0.1.0"

__all__ = [
    "BipartiteSymmetryClass",
    "CliffordGate",
    "EdgeColoring",
    "FamilySpec",
    "Graph",
    "HeuristicResult",
    "InvalidInputError",
    "LcSequence",
    "LcStep",
    "MeasurementOutcome",
    "OrbitReport",
    "PlanOp",
    "PreconditionError",
    "PreparationPlan",
    "Qasst",
    "ResourceLimitError",
    "ResourceSummary",
    "SplitFuseError",
    "Tableau",
    "apply_gate",
    "apply_sequence",
    "bipartite_classify",
    "bipartite_transform",
    "build",
    "clique_star",
    "compare_strategies",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "decompose",
    "delete_vertex",
    "diagnose_plan",
    "edge_color",
    "edge_pivot",
    "enumerate_orbit",
    "enumerate_triangle_vertices",
    "find_splits_bruteforce",
    "fuse_type1",
    "fuse_type2",
    "fuse_type2_tableau",
    "graph_state_tableau",
    "graph_stats",
    "is_distance_hereditary",
    "local_complement",
    "measure_pauli",
    "measure_pauli_tableau",
    "min_degree_formula",
    "min_edges_formula",
    "multi_leaf_repeater",
    "multileaf_repeater_equivalent",
    "oracle_min_stats",
    "orbit_size_bipartite",
    "orbit_size_cliquestar",
    "orbit_size_multipartite",
    "plan_generalized",
    "plan_heuristic",
    "plan_naive",
    "plan_split_fuse",
    "random_dh",
    "random_er_connected",
    "reconstruct",
    "repeater",
    "resource_formulas",
    "select_min_edges",
    "star",
    "states_equal",
    "triangle_greedy",
    "verify_plan",
]

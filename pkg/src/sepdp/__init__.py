"""Minimal separators, potential maximal cliques, and exact DPs over them."""

from .decomposition import Block, Decomposition, GoodTriple, enumerate_pmcs, is_pmc
from .dp_connected import (
    CharacteristicStats,
    connected_feedback_vertex_set,
    connected_vertex_cover,
    solve_max_induced_tw_connected,
)
from .dp_treewidth import solve_max_induced_tw
from .errors import (
    BudgetExceeded,
    DisconnectedComplementError,
    PMCBudgetExceeded,
    PreconditionError,
    SeparatorBudgetExceeded,
    VerificationError,
)
from .graph_classes import ArcModel, graph_from_arc_model, is_chordal, random_arc_model, random_chordal
from .graph_core import Graph, power
from .minsep import (
    enumerate_minimal_separators,
    is_minimal_separator,
    theorem1_map,
    verify_power_theorem,
)
from .reductions import (
    BipartiteGraph,
    distance_d_independent_set,
    red_blue_to_cvc,
    solution_correspondence_check,
    verify_appendix_lemma,
)

__all__ = [
    "ArcModel",
    "BipartiteGraph",
    "Block",
    "BudgetExceeded",
    "CharacteristicStats",
    "Decomposition",
    "DisconnectedComplementError",
    "GoodTriple",
    "Graph",
    "PMCBudgetExceeded",
    "PreconditionError",
    "SeparatorBudgetExceeded",
    "VerificationError",
    "connected_feedback_vertex_set",
    "connected_vertex_cover",
    "distance_d_independent_set",
    "enumerate_minimal_separators",
    "enumerate_pmcs",
    "graph_from_arc_model",
    "is_chordal",
    "is_minimal_separator",
    "is_pmc",
    "power",
    "random_arc_model",
    "random_chordal",
    "red_blue_to_cvc",
    "solution_correspondence_check",
    "solve_max_induced_tw",
    "solve_max_induced_tw_connected",
    "theorem1_map",
    "verify_appendix_lemma",
    "verify_power_theorem",
]

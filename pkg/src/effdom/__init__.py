"""Efficient domination (perfect codes) through maximum-weight independent
sets in graph squares, with forbidden-pattern detection and corpus checks
of the square-graph structure theorems for (P6, banner)-free graphs."""

from .eds import EdsResult, check_lemma1, eds_brute_force, eds_via_square, verify_eds
from .estimators import EfficientDominationSolver, GraphSquarer, PatternFreeClassifier
from .formats import emit_graph6, parse_graph6
from .graph import (
    Graph,
    closed_neighborhood,
    distance_matrix,
    domination_weights,
    from_edge_list,
    induced_subgraph,
    is_independent,
    square,
)
from .harness import (
    SampleSpec,
    TheoremVerdict,
    enumerate_graphs,
    make_f_free,
    random_graph,
    search_counterexamples,
    verify_theorem,
)
from .mwis import SolveResult, mwds_exact, mwis_exact, mwis_oracle
from .patterns import Pattern, catalog, class_report, find_induced, is_f_free

__all__ = [
    "EdsResult",
    "check_lemma1",
    "eds_brute_force",
    "eds_via_square",
    "verify_eds",
    "EfficientDominationSolver",
    "GraphSquarer",
    "PatternFreeClassifier",
    "emit_graph6",
    "parse_graph6",
    "Graph",
    "closed_neighborhood",
    "distance_matrix",
    "domination_weights",
    "from_edge_list",
    "induced_subgraph",
    "is_independent",
    "square",
    "SampleSpec",
    "TheoremVerdict",
    "enumerate_graphs",
    "make_f_free",
    "random_graph",
    "search_counterexamples",
    "verify_theorem",
    "SolveResult",
    "mwds_exact",
    "mwis_exact",
    "mwis_oracle",
    "Pattern",
    "catalog",
    "class_report",
    "find_induced",
    "is_f_free",
]

__version__ = "0.1.0"

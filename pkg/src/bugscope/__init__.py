"""Exact certification of betweenness-uniform graphs and their complements."""

__version__ = "0.1.0"

from .centrality import BetweennessProfile, betweenness_exact, betweenness_oracle, is_bug
from .certify import CertificationReport, is_cobug
from .cobetweenness import WeightedComplement, co_betweenness_all, close_inclusion_violation
from .constructions import (
    Construction,
    build,
    cycles_cobug,
    family_above_one,
    inflated_cycles_cobug,
    multipartite_plus_stars,
    stars_cobug,
)
from .enumeration import canonical_form, enumerate_connected_graphs, enumerate_graphs
from .errors import (
    BugscopeError,
    CapExceededError,
    DisconnectedGraphError,
    GraphFormatError,
    PreconditionError,
    UndefinedWeightError,
)
from .graph import Graph, complement, connected_components, diameter, inflate
from .io import from_graph6, parse_graph, read_graph, to_edge_list, to_graph6, write_graph
from .search import SearchConfig, exhaustive_bug_scan, exotic_search, verify_star_exclusion
from .structure import structural_filters, uniformity_params
from .verify import run_lemmas

__all__ = [
    "BetweennessProfile", "BugscopeError", "CapExceededError", "CertificationReport",
    "Construction", "DisconnectedGraphError", "Graph", "GraphFormatError",
    "PreconditionError", "SearchConfig", "UndefinedWeightError", "WeightedComplement",
    "betweenness_exact", "betweenness_oracle", "build", "canonical_form",
    "close_inclusion_violation", "co_betweenness_all", "complement", "connected_components",
    "cycles_cobug", "diameter", "enumerate_connected_graphs", "enumerate_graphs",
    "exhaustive_bug_scan", "exotic_search", "family_above_one", "from_graph6", "inflate",
    "inflated_cycles_cobug", "is_bug", "is_cobug", "multipartite_plus_stars", "parse_graph",
    "read_graph", "run_lemmas", "stars_cobug", "structural_filters", "to_edge_list",
    "to_graph6", "uniformity_params", "verify_star_exclusion", "write_graph",
]

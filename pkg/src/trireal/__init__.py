"""Triangular realisations of regular and biregular degree sequences.

A graph is triangular when every edge lies in a 3-cycle. The package
builds such graphs for graphical sequences (a^p, b^q) with a > b >= 4,
certifies each one, and ships an exhaustive search to cross-check them.
"""

from .constructors import Realization, realize
from .errors import TrirealError
from .graph import Graph, degree_sequence_of, edges_without_triangle, is_top_monotone_cycle
from .oracle import SearchBudget, conjecture_sweep, oracle_search
from .sequences import BiregularSpec, DegreeSequence, classify, is_graphical, parse_degree_sequence

__version__ = "0.1.0"

__all__ = [
    "BiregularSpec",
    "DegreeSequence",
    "Graph",
    "Realization",
    "SearchBudget",
    "TrirealError",
    "classify",
    "conjecture_sweep",
    "degree_sequence_of",
    "edges_without_triangle",
    "is_graphical",
    "is_top_monotone_cycle",
    "oracle_search",
    "parse_degree_sequence",
    "realize",
]

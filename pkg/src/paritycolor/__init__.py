"""Edge-colorings in which no path (or no open walk) uses every color an even
number of times, with certificate-producing checks and small exact solvers."""

from .graph_core import (EdgeColoring, Graph, ParityVector, ParseError, Walk, parity_vector,
                         parse_coloring, parse_graph)
from .verify import (Certificate, InconclusiveError, Verdict, check_conflict_free,
                     check_cycles_parity, check_four_constraint, check_parity_coloring,
                     check_spec, parity_space)
from .solver import SolveLimits, SolveResult, solve_conflict_free, solve_p, solve_spec

__all__ = [
    "Certificate", "EdgeColoring", "Graph", "InconclusiveError", "ParityVector", "ParseError",
    "SolveLimits", "SolveResult", "Verdict", "Walk", "check_conflict_free",
    "check_cycles_parity", "check_four_constraint", "check_parity_coloring", "check_spec",
    "parity_space", "parity_vector", "parse_coloring", "parse_graph", "solve_conflict_free",
    "solve_p", "solve_spec",
]

"""Output-sensitive regular path query evaluation.

Any RPQ is reduced through the product graph to ``a b* c`` over a derived
graph, which is then solved with a light/heavy split on capped reachability
lists. The classical product-graph BFS, a boolean-matrix oracle and two
semi-naive transitive closures sit alongside for comparison.
"""

from .automaton import Nfa, accepts, compile, load_automaton
from .baseline import PgCounters, eval_pg, eval_pg_bidirectional
from .graph import LabeledGraph, dump_edge_list, load_edge_list, restrict_alphabet
from .oracle import eval_matrix
from .ospg import WorkCounters, eval_abc, eval_rpq
from .reduction import AbcGraph, build_abc_graph, product_graph, project_output
from .regex import is_kleene_free, parse
from .tclosure import TcStats, eval_a_star, tc_binary, tc_linear

__all__ = [
    "Nfa", "accepts", "compile", "load_automaton",
    "PgCounters", "eval_pg", "eval_pg_bidirectional",
    "LabeledGraph", "dump_edge_list", "load_edge_list", "restrict_alphabet",
    "eval_matrix",
    "WorkCounters", "eval_abc", "eval_rpq",
    "AbcGraph", "build_abc_graph", "product_graph", "project_output",
    "is_kleene_free", "parse",
    "TcStats", "eval_a_star", "tc_binary", "tc_linear",
]

__version__ = "0.1.0"

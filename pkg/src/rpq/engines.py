"""Name -> evaluator registry shared by the CLI and the benchmark harness.

Every runner takes ``(graph, query)`` and returns ``(pairs, counters)`` where
``counters`` is a flat ``dict`` and always has a ``total_work`` entry.
"""

from __future__ import annotations

from typing import Callable

from .baseline import PgCounters, eval_pg, eval_pg_bidirectional
from .graph import LabeledGraph
from .oracle import eval_matrix
from .ospg import WorkCounters, eval_rpq

Runner = Callable[[LabeledGraph, object], "tuple[set, dict[str, int]]"]


def run_ospg(g, q):
    c = WorkCounters()
    pairs = eval_rpq(g, q, c)
    return pairs, c.as_dict()


def run_pg(g, q):
    c = PgCounters()
    pairs = eval_pg(g, q, c)
    return pairs, {"bfs_edge_visits": c.bfs_edge_visits, "bfs_runs": c.bfs_runs,
                   "total_work": c.bfs_edge_visits}


def run_pg_bidi(g, q):
    c = PgCounters()
    pairs = eval_pg_bidirectional(g, q, c)
    return pairs, {"forward_visits": c.forward_visits, "backward_visits": c.backward_visits,
                   "bfs_runs": c.bfs_runs, "total_work": c.combined()}


def run_oracle(g, q):
    from .automaton import Nfa

    if isinstance(q, Nfa):
        raise TypeError("the oracle evaluates regex queries, not automata")
    pairs = eval_matrix(g, q)
    return pairs, {"total_work": 0}


ENGINES: dict[str, Runner] = {
    "ospg": run_ospg,
    "pg": run_pg,
    "pg-bidi": run_pg_bidi,
    "oracle": run_oracle,
}

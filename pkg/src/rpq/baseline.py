"""Product-graph (PG) baseline: one BFS per start vertex of ``G x M``.

Traversals run through :mod:`scipy.sparse.csgraph`. An edge visit is an
out-edge scan of a dequeued vertex, so a single BFS costs the sum of the
out-degrees of everything it reaches.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import breadth_first_order

from .graph import LabeledGraph, restrict_alphabet
from .ospg import as_nfa
from .reduction import product_graph

__all__ = ["PgCounters", "eval_pg", "eval_pg_bidirectional"]


@dataclass
class PgCounters:
    bfs_edge_visits: int = 0
    forward_visits: int = 0
    backward_visits: int = 0
    bfs_runs: int = 0

    def combined(self) -> int:
        return self.forward_visits + self.backward_visits

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class _Setup:
    """Restricted graph, product adjacency and terminal vertex sets."""

    def __init__(self, g: LabeledGraph, q):
        self.g = g
        self.m = m = as_nfa(q)
        self.rg = rg = restrict_alphabet(g, m.alphabet)
        pg = product_graph(rg, m)
        self.pg = pg
        n = pg.num_vertices
        rows = np.fromiter((x for x, _ in pg.edges), dtype=np.int64, count=len(pg.edges))
        cols = np.fromiter((y for _, y in pg.edges), dtype=np.int64, count=len(pg.edges))
        ones = np.ones(len(pg.edges))
        self.adj = sparse.csr_matrix((ones, (rows, cols)), shape=(n, n))
        self.radj = sparse.csr_matrix((ones, (cols, rows)), shape=(n, n))
        self.outdeg = np.diff(self.adj.indptr)
        self.indeg = np.diff(self.radj.indptr)
        self.origin = np.array([v for v, _ in pg.vertices], dtype=np.int64)
        self.is_final = np.array([q in m.finals for _, q in pg.vertices], dtype=bool)
        self.is_start = np.array([q in m.starts for _, q in pg.vertices], dtype=bool)
        # (v, q) with q both start and final but no product edge: matches itself only
        both = m.starts & m.finals
        self.isolated_hits = {(v, v) for v in range(rg.num_vertices)
                              for q in both if (v, q) not in pg.index}
        self.back = (None if rg is g
                     else [g.vertex_id[name] for name in rg.vertex_names])

    def lift(self, pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
        if self.back is None:
            return pairs
        b = self.back
        return {(b[u], b[v]) for u, v in pairs}


def _bfs(adj, x: int) -> np.ndarray:
    return breadth_first_order(adj, x, directed=True, return_predecessors=False)


def eval_pg(g: LabeledGraph, q, counters: PgCounters | None = None) -> set[tuple[int, int]]:
    """Classical PG evaluation; returns pairs of ``g`` vertex ids."""
    counters = counters if counters is not None else PgCounters()
    st = _Setup(g, q)
    out = set(st.isolated_hits)
    for x in np.flatnonzero(st.is_start):
        reached = _bfs(st.adj, int(x))
        counters.bfs_runs += 1
        visits = int(st.outdeg[reached].sum())
        counters.bfs_edge_visits += visits
        counters.forward_visits += visits
        v = int(st.origin[x])
        hits = reached[st.is_final[reached]]
        out.update((v, int(u)) for u in np.unique(st.origin[hits]))
    return st.lift(out)


def _reach_matrix(adj, seeds: np.ndarray, degree: np.ndarray, n: int):
    """Rows: seeds; columns: vertices reached. Returns (matrix, edge visits)."""
    indptr = [0]
    chunks = []
    visits = 0
    for x in seeds:
        reached = _bfs(adj, int(x))
        visits += int(degree[reached].sum())
        chunks.append(np.sort(reached))
        indptr.append(indptr[-1] + len(reached))
    indices = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)
    data = np.ones(len(indices), dtype=bool)
    mat = sparse.csr_matrix((data, indices, np.asarray(indptr)), shape=(len(seeds), n))
    return mat, visits


def eval_pg_bidirectional(g: LabeledGraph, q,
                          counters: PgCounters | None = None) -> set[tuple[int, int]]:
    """Forward BFS from start vertices, backward BFS from final vertices.

    A start ``s`` and a final ``t`` form an answer when their reached sets
    share a meeting vertex; the join is a sparse boolean product of the two
    reach matrices.
    """
    counters = counters if counters is not None else PgCounters()
    st = _Setup(g, q)
    n = st.pg.num_vertices
    starts = np.flatnonzero(st.is_start)
    finals = np.flatnonzero(st.is_final)
    fwd, fvis = _reach_matrix(st.adj, starts, st.outdeg, n)
    bwd, bvis = _reach_matrix(st.radj, finals, st.indeg, n)
    counters.forward_visits += fvis
    counters.backward_visits += bvis
    counters.bfs_edge_visits += fvis + bvis
    counters.bfs_runs += len(starts) + len(finals)

    out = set(st.isolated_hits)
    meet = (fwd @ bwd.T).tocoo()
    out.update(zip(st.origin[starts[meet.row]].tolist(), st.origin[finals[meet.col]].tolist()))
    return st.lift(out)

"""Product graph and the reduction of an arbitrary RPQ to ``a b* c``.

The reduced graph has one vertex per materialized product vertex ``(v, q)``,
a ``b`` edge for every product edge, an ``a`` self-loop on every ``(v, q)``
with ``q`` a start state and a ``c`` self-loop on every ``(v, q)`` with ``q``
final. An original pair ``(v, u)`` matches the query iff some ``(v, q)`` and
``(u, p)`` are connected by an ``a b* c`` path, so answers are recovered by
projecting the state component away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Nfa
from .graph import LabeledGraph

__all__ = ["ProductGraph", "AbcGraph", "product_graph", "build_abc_graph",
           "abc_graph_from_labeled", "project_output", "A", "B", "C"]

A, B, C = 0, 1, 2
ABC_LABELS = ("a", "b", "c")


@dataclass
class ProductGraph:
    """Unlabeled graph over materialized ``(v, q)`` pairs, numbered in
    lexicographic ``(v, q)`` order."""

    vertices: list[tuple[int, int]]
    index: dict[tuple[int, int], int]
    edges: list[tuple[int, int]]

    def pairs(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        vs = self.vertices
        return {(vs[x], vs[y]) for x, y in self.edges}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


def _product_edges(g: LabeledGraph, m: Nfa) -> set[tuple[int, int, int, int]]:
    by_label: dict[int, list[tuple[int, int]]] = {}
    for v, l, u in g.edges:
        by_label.setdefault(l, []).append((v, u))
    out = set()
    for sym, moves in m.by_symbol.items():
        l = g.label_id.get(sym)
        if l is None:
            continue
        for q, p in moves:
            out.update((v, q, u, p) for v, u in by_label.get(l, ()))
    return out


def _number(vertices) -> tuple[list, dict]:
    order = sorted(vertices)
    return order, {vq: i for i, vq in enumerate(order)}


def product_graph(g: LabeledGraph, m: Nfa) -> ProductGraph:
    """``G x M``: an edge ``((v,q),(u,p))`` whenever some symbol moves both."""
    quads = _product_edges(g, m)
    touched = {(v, q) for v, q, _, _ in quads} | {(u, p) for _, _, u, p in quads}
    order, index = _number(touched)
    edges = sorted((index[v, q], index[u, p]) for v, q, u, p in quads)
    return ProductGraph(order, index, edges)


class AbcGraph:
    """Reduced graph over labels ``a``, ``b``, ``c``.

    ``inner`` is a :class:`LabeledGraph` whose label ids are fixed to
    ``A=0, B=1, C=2``; ``origin[x]`` and ``state[x]`` give the original vertex
    and automaton state of product vertex ``x``.
    """

    def __init__(self, inner: LabeledGraph, origin: list[int], state: list[int]):
        if inner.label_names[:3] != ABC_LABELS or len(inner.label_names) != 3:
            raise ValueError("AbcGraph labels must be exactly ('a', 'b', 'c')")
        self.inner = inner
        self.origin = origin
        self.state = state

    @property
    def num_vertices(self) -> int:
        return self.inner.num_vertices

    @property
    def num_edges(self) -> int:
        return self.inner.num_edges

    def count(self, label: int) -> int:
        return sum(1 for _, l, _ in self.inner.edges if l == label)

    def labeled_edges(self, label: int) -> list[tuple[int, int]]:
        return [(s, d) for s, l, d in self.inner.edges if l == label]

    def __repr__(self) -> str:
        return (f"AbcGraph(vertices={self.num_vertices}, a={self.count(A)}, "
                f"b={self.count(B)}, c={self.count(C)})")


def build_abc_graph(g: LabeledGraph, m: Nfa) -> AbcGraph:
    """Reduce the query ``m`` over ``g`` to ``a b* c`` over a new graph."""
    quads = _product_edges(g, m)
    vertices = {(v, q) for v, q, _, _ in quads} | {(u, p) for _, _, u, p in quads}
    for v in range(g.num_vertices):
        vertices.update((v, q) for q in m.starts)
        vertices.update((v, q) for q in m.finals)
    order, index = _number(vertices)

    edges = [(index[v, q], B, index[u, p]) for v, q, u, p in sorted(quads)]
    for x, (v, q) in enumerate(order):
        if q in m.starts:
            edges.append((x, A, x))
        if q in m.finals:
            edges.append((x, C, x))

    names = [f"{g.vertex_names[v]}@{m.state_names[q]}" for v, q in order]
    inner = LabeledGraph(names, ABC_LABELS, edges)
    gp = AbcGraph(inner, [v for v, _ in order], [q for _, q in order])
    _check_loops(gp, m)
    return gp


def _check_loops(gp: AbcGraph, m: Nfa) -> None:
    for s, l, d in gp.inner.edges:
        if l == A:
            assert s == d and gp.state[s] in m.starts
        elif l == C:
            assert s == d and gp.state[s] in m.finals


def abc_graph_from_labeled(g: LabeledGraph) -> AbcGraph:
    """View a graph already labeled over ``{a, b, c}`` as a reduced graph.

    Runs ``a b* c`` on ``g`` itself, with the identity as origin map.
    """
    extra = set(g.label_names) - set(ABC_LABELS)
    if extra:
        raise ValueError(f"labels outside {{a, b, c}}: {sorted(extra)}")
    remap = {g.label_id[name]: ABC_LABELS.index(name) for name in g.label_names}
    inner = LabeledGraph(g.vertex_names, ABC_LABELS,
                         ((s, remap[l], d) for s, l, d in g.edges))
    n = g.num_vertices
    return AbcGraph(inner, list(range(n)), [0] * n)


def project_output(abc_pairs, gp: AbcGraph) -> set[tuple[int, int]]:
    """Map product-vertex pairs back to original vertex pairs."""
    origin = gp.origin
    return {(origin[x], origin[y]) for x, y in abc_pairs}

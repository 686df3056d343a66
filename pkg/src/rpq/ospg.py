"""Output-sensitive evaluation of ``a b* c`` and the full RPQ pipeline.

For each vertex ``x`` of the reduced graph we collect up to
``cap = isqrt(|E|) + 1`` targets reachable by ``b* c``. Vertices whose list
stays at or below ``isqrt(|E|)`` are light and their lists are complete;
vertices that hit the cap are heavy. Light answers come from a join of the
``a`` edges with the light lists. Heavy answers come from one forward
traversal per ``a``-source that points at a heavy vertex; there are at most
``OUT / isqrt(|E|)`` such sources, which is where output sensitivity comes
from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, fields
from math import isqrt

from .automaton import Nfa, compile
from .graph import LabeledGraph, restrict_alphabet
from .reduction import A, B, C, AbcGraph, build_abc_graph, project_output
from .regex import Node, parse

__all__ = [
    "WorkCounters",
    "ReachMap",
    "LightHeavySplit",
    "reach_cap",
    "compute_bounded_reach",
    "split_light_heavy",
    "eval_light",
    "eval_heavy",
    "eval_abc",
    "eval_rpq",
    "as_nfa",
]


@dataclass
class WorkCounters:
    """Deterministic work tallies for one evaluation.

    ``input_edges`` is the size of the reduced graph that had to be read;
    the remaining fields count the inner-loop steps of each phase.
    """

    input_edges: int = 0
    step1_edge_checks: int = 0
    light_join_lookups: int = 0
    heavy_sources: int = 0
    heavy_bfs_edge_visits: int = 0

    def total(self) -> int:
        return (self.input_edges + self.step1_edge_checks
                + self.light_join_lookups + self.heavy_bfs_edge_visits)

    def as_dict(self) -> dict[str, int]:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total_work"] = self.total()
        return d


def reach_cap(num_edges: int) -> int:
    return isqrt(num_edges) + 1


@dataclass
class ReachMap:
    cap: int
    lists: list[list[int]]

    def degree(self, x: int) -> int:
        return len(self.lists[x])

    def __len__(self) -> int:
        return sum(len(l) for l in self.lists)


@dataclass
class LightHeavySplit:
    threshold: int
    light: dict[int, list[int]] = field(default_factory=dict)
    heavy: set[int] = field(default_factory=set)

    def light_pairs(self) -> set[tuple[int, int]]:
        return {(x, y) for x, ys in self.light.items() for y in ys}


def compute_bounded_reach(gp: AbcGraph, counters: WorkCounters | None = None) -> ReachMap:
    """Capped ``b* c`` reachability by backward propagation.

    Lists are seeded from ``c`` edges. Each newly stored target ``y`` of
    ``x`` is offered once to every ``b``-predecessor of ``x``, so each
    ``b`` edge is checked at most ``cap`` times. Events are processed FIFO,
    which fixes which ``cap`` targets a heavy vertex keeps.
    """
    counters = counters if counters is not None else WorkCounters()
    g = gp.inner
    n = g.num_vertices
    cap = reach_cap(g.num_edges)
    lists: list[list[int]] = [[] for _ in range(n)]
    member: list[set[int]] = [set() for _ in range(n)]
    events: deque[tuple[int, int]] = deque()

    for x in range(n):
        for y in g.forward[C][x]:
            if len(lists[x]) < cap and y not in member[x]:
                lists[x].append(y)
                member[x].add(y)
                events.append((x, y))

    rev_b = g.reverse[B]
    checks = 0
    while events:
        x, y = events.popleft()
        for w in rev_b[x]:
            checks += 1
            lw = lists[w]
            if len(lw) < cap and y not in member[w]:
                lw.append(y)
                member[w].add(y)
                events.append((w, y))
    counters.step1_edge_checks += checks
    return ReachMap(cap, lists)


def split_light_heavy(r: ReachMap, e_count: int) -> LightHeavySplit:
    threshold = isqrt(e_count)
    if r.cap != threshold + 1:
        raise ValueError(f"reach map cap {r.cap} does not match isqrt({e_count}) + 1")
    s = LightHeavySplit(threshold)
    for x, ys in enumerate(r.lists):
        if not ys:
            continue
        if len(ys) <= threshold:
            s.light[x] = ys
        else:
            s.heavy.add(x)
    return s


def eval_light(gp: AbcGraph, s: LightHeavySplit,
               counters: WorkCounters | None = None) -> set[tuple[int, int]]:
    """Join every ``a`` edge ``(x, z)`` with the complete list of light ``z``."""
    counters = counters if counters is not None else WorkCounters()
    out = set()
    fwd_a = gp.inner.forward[A]
    light = s.light
    lookups = 0
    for x in range(gp.num_vertices):
        for z in fwd_a[x]:
            lookups += 1
            ys = light.get(z)
            if ys:
                lookups += len(ys)
                out.update((x, y) for y in ys)
    counters.light_join_lookups += lookups
    return out


def eval_heavy(gp: AbcGraph, s: LightHeavySplit,
               counters: WorkCounters | None = None) -> set[tuple[int, int]]:
    """One ``b``-traversal per source whose ``a`` edge enters a heavy vertex."""
    counters = counters if counters is not None else WorkCounters()
    g = gp.inner
    fwd_a, fwd_b, fwd_c = g.forward[A], g.forward[B], g.forward[C]
    heavy = s.heavy
    sources = []
    for x in range(g.num_vertices):
        frontier = [y for y in fwd_a[x] if y in heavy]
        if frontier:
            sources.append((x, frontier))
    counters.heavy_sources += len(sources)

    out = set()
    stamp = [0] * g.num_vertices
    visits = 0
    for epoch, (x, frontier) in enumerate(sources, start=1):
        queue = deque()
        for y in frontier:
            if stamp[y] != epoch:
                stamp[y] = epoch
                queue.append(y)
        while queue:
            z = queue.popleft()
            for u in fwd_c[z]:
                visits += 1
                out.add((x, u))
            for w in fwd_b[z]:
                visits += 1
                if stamp[w] != epoch:
                    stamp[w] = epoch
                    queue.append(w)
    counters.heavy_bfs_edge_visits += visits
    return out


def eval_abc(gp: AbcGraph, counters: WorkCounters | None = None) -> set[tuple[int, int]]:
    """Exact answer of ``a b* c`` on ``gp``, over product-vertex ids."""
    counters = counters if counters is not None else WorkCounters()
    counters.input_edges += gp.num_edges
    r = compute_bounded_reach(gp, counters)
    s = split_light_heavy(r, gp.num_edges)
    return eval_light(gp, s, counters) | eval_heavy(gp, s, counters)


def as_nfa(q) -> Nfa:
    if isinstance(q, Nfa):
        return q
    if isinstance(q, str):
        q = parse(q)
    return compile(q)


def query_alphabet(q) -> set[str]:
    return as_nfa(q).alphabet


def eval_rpq(g: LabeledGraph, q: str | Node | Nfa,
             counters: WorkCounters | None = None) -> set[tuple[int, int]]:
    """Evaluate an RPQ over ``g``; returns pairs of ``g`` vertex ids.

    Edges whose label the query never reads are dropped first, and with them
    every vertex they alone touched.
    """
    m = as_nfa(q)
    rg = restrict_alphabet(g, m.alphabet)
    gp = build_abc_graph(rg, m)
    pairs = project_output(eval_abc(gp, counters), gp)
    if rg is g:
        return pairs
    back = [g.vertex_id[name] for name in rg.vertex_names]
    return {(back[u], back[v]) for u, v in pairs}

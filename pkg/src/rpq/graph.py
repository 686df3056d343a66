"""Edge-labeled directed graphs with interned vertices and labels.

Vertices and labels are interned to dense integer ids in first-appearance
order. Only vertices that touch at least one edge are ever registered, so a
graph never carries isolated vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, TextIO

__all__ = [
    "EdgeListError",
    "LabeledGraph",
    "PairSet",
    "load_edge_list",
    "dump_edge_list",
    "restrict_alphabet",
]

PairSet = set  # set[tuple[int, int]]


class EdgeListError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class LabeledGraph:
    """Immutable edge-labeled directed graph.

    ``forward[l][v]`` lists the successors of ``v`` along label ``l`` and
    ``reverse[l][v]`` the predecessors. Edges are unique ``(src, label, dst)``
    id triples kept in insertion order.
    """

    def __init__(self, vertex_names: Sequence[str], label_names: Sequence[str],
                 edges: Iterable[tuple[int, int, int]]):
        self.vertex_names: tuple[str, ...] = tuple(vertex_names)
        self.label_names: tuple[str, ...] = tuple(label_names)
        self.vertex_id = {name: i for i, name in enumerate(self.vertex_names)}
        self.label_id = {name: i for i, name in enumerate(self.label_names)}
        if len(self.vertex_id) != len(self.vertex_names):
            raise ValueError("duplicate vertex name")
        if len(self.label_id) != len(self.label_names):
            raise ValueError("duplicate label name")

        n, k = len(self.vertex_names), len(self.label_names)
        seen = set()
        ordered = []
        for e in edges:
            e = (int(e[0]), int(e[1]), int(e[2]))
            if e in seen:
                continue
            s, l, d = e
            if not (0 <= s < n and 0 <= d < n):
                raise ValueError(f"edge {e} references an unregistered vertex")
            if not 0 <= l < k:
                raise ValueError(f"edge {e} references an unregistered label")
            seen.add(e)
            ordered.append(e)
        self.edges: tuple[tuple[int, int, int], ...] = tuple(ordered)
        self._edge_set = frozenset(seen)

        self.forward: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
        self.reverse: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
        touched = [False] * n
        for s, l, d in self.edges:
            self.forward[l][s].append(d)
            self.reverse[l][d].append(s)
            touched[s] = touched[d] = True
        if not all(touched):
            lonely = [self.vertex_names[v] for v in range(n) if not touched[v]]
            raise ValueError(f"vertices without edges: {lonely[:5]}")

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[str, str, str]]) -> "LabeledGraph":
        """Build a graph from ``(src, label, dst)`` name triples."""
        vertices: dict[str, int] = {}
        labels: dict[str, int] = {}
        edges = []
        for src, label, dst in triples:
            s = vertices.setdefault(str(src), len(vertices))
            l = labels.setdefault(str(label), len(labels))
            d = vertices.setdefault(str(dst), len(vertices))
            edges.append((s, l, d))
        return cls(list(vertices), list(labels), edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.num_edges

    def __contains__(self, edge) -> bool:
        return edge in self._edge_set

    def __repr__(self) -> str:
        return (f"LabeledGraph(vertices={self.num_vertices}, edges={self.num_edges}, "
                f"labels={list(self.label_names)})")

    def successors(self, v: int, label: str) -> list[int]:
        l = self.label_id.get(label)
        return [] if l is None else self.forward[l][v]

    def edges_with_label(self, label: str) -> list[tuple[int, int]]:
        l = self.label_id.get(label)
        if l is None:
            return []
        return [(s, d) for s, ll, d in self.edges if ll == l]

    def triples(self) -> Iterator[tuple[str, str, str]]:
        """Edges as name triples, in insertion order."""
        vn, ln = self.vertex_names, self.label_names
        for s, l, d in self.edges:
            yield vn[s], ln[l], vn[d]

    def named_pairs(self, pairs: Iterable[tuple[int, int]]) -> set[tuple[str, str]]:
        vn = self.vertex_names
        return {(vn[u], vn[v]) for u, v in pairs}


def load_edge_list(text) -> LabeledGraph:
    """Parse ``src<TAB>label<TAB>dst`` lines into a :class:`LabeledGraph`.

    Accepts ``str``, ``bytes`` or a text/binary stream. Lines starting with
    ``#`` and blank lines are skipped; repeated edges are dropped.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")

    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\r\n").split("\t")
        if len(fields) != 3:
            raise EdgeListError(f"expected 3 tab-separated fields, got {len(fields)}", lineno)
        src, label, dst = (f.strip() for f in fields)
        if not label:
            raise EdgeListError("empty label", lineno)
        if not src or not dst:
            raise EdgeListError("empty vertex name", lineno)
        if any(ch.isspace() for ch in label):
            raise EdgeListError(f"label {label!r} contains whitespace", lineno)
        triples.append((src, label, dst))
    return LabeledGraph.from_triples(triples)


def dump_edge_list(g: LabeledGraph, out: TextIO | None = None) -> str:
    """Serialize ``g`` in the edge-list format; also writes to ``out`` if given."""
    text = "".join(f"{s}\t{l}\t{d}\n" for s, l, d in g.triples())
    if out is not None:
        out.write(text)
    return text


def restrict_alphabet(g: LabeledGraph, keep: Iterable[str]) -> LabeledGraph:
    """Drop every edge whose label is not in ``keep``.

    Vertices left without edges are unregistered, so ids are renumbered; map
    back through ``vertex_names``.
    """
    keep = set(keep)
    if keep >= set(g.label_names):
        return g
    return LabeledGraph.from_triples(t for t in g.triples() if t[1] in keep)

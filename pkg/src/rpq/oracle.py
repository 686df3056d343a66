"""Reference RPQ semantics in the boolean matrix semiring.

Each sub-expression denotes a ``|V| x |V|`` boolean relation: a symbol is its
adjacency matrix, concatenation is the boolean product, union is elementwise
or, and ``A*`` is the reflexive-transitive closure of ``A``, obtained by
squaring ``I | A`` until it stops changing.

The answer is taken over the vertices touched by edges whose label occurs in
the query, the same universe the engines use.

Cross-checking against walk enumeration only needs walks of length at most
``|V| * |V_Q|``: a witness path in the product graph can be shortened to a
simple one, and the product graph has that many vertices.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import LabeledGraph, restrict_alphabet
from .regex import Concat, Epsilon, Node, Star, Symbol, Union, parse, symbols

__all__ = ["OracleCapacityError", "MAX_VERTICES", "eval_matrix", "star_closure",
           "bool_matmul", "matrix_closure"]

MAX_VERTICES = 4096


class OracleCapacityError(RuntimeError):
    pass


def bool_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # float32 holds exact integer counts up to 2**24, far above the size guard
    return (x.astype(np.float32) @ y.astype(np.float32)) > 0


def star_closure(m: np.ndarray) -> tuple[np.ndarray, int]:
    """Reflexive-transitive closure and the number of squarings performed."""
    n = m.shape[0]
    x = m | np.eye(n, dtype=bool)
    rounds = 0
    while True:
        rounds += 1
        nxt = bool_matmul(x, x)
        if np.array_equal(nxt, x):
            break
        x = nxt
    assert rounds <= max(1, math.ceil(math.log2(max(n, 1)))) + 1
    return x, rounds


def matrix_closure(m: np.ndarray) -> np.ndarray:
    """Transitive (non-reflexive) closure ``M . M*``."""
    star, _ = star_closure(m)
    return bool_matmul(m, star)


def _adjacency(g: LabeledGraph, label: str) -> np.ndarray:
    n = g.num_vertices
    out = np.zeros((n, n), dtype=bool)
    l = g.label_id.get(label)
    if l is not None:
        for s, ll, d in g.edges:
            if ll == l:
                out[s, d] = True
    return out


def _denote(g: LabeledGraph, node: Node) -> np.ndarray:
    n = g.num_vertices
    if isinstance(node, Symbol):
        return _adjacency(g, node.name)
    if isinstance(node, Epsilon):
        return np.eye(n, dtype=bool)
    if isinstance(node, Concat):
        acc = _denote(g, node.children[0])
        for c in node.children[1:]:
            acc = bool_matmul(acc, _denote(g, c))
        return acc
    if isinstance(node, Union):
        acc = np.zeros((n, n), dtype=bool)
        for c in node.children:
            acc |= _denote(g, c)
        return acc
    if isinstance(node, Star):
        return star_closure(_denote(g, node.child))[0]
    raise TypeError(node)


def eval_matrix(g: LabeledGraph, q: Node | str) -> set[tuple[int, int]]:
    if isinstance(q, str):
        q = parse(q)
    rg = restrict_alphabet(g, symbols(q))
    if rg.num_vertices > MAX_VERTICES:
        raise OracleCapacityError(
            f"{rg.num_vertices} vertices exceed the oracle limit of {MAX_VERTICES}; "
            "use an engine (ospg, pg) instead")
    if rg.num_vertices == 0:
        return set()
    rows, cols = np.nonzero(_denote(rg, q))
    back = [g.vertex_id[name] for name in rg.vertex_names]
    return {(back[u], back[v]) for u, v in zip(rows.tolist(), cols.tolist())}

"""Deterministic instance families.

``gen_random`` draws from :class:`random.Random` (MT19937) seeded with the
given integer, whose output stream is fixed across platforms.
"""

from __future__ import annotations

import random
from typing import Sequence

from .graph import LabeledGraph
from .regex import Node, Star, Symbol, concat, union

__all__ = ["gen_path", "gen_two_cycles", "gen_random", "random_regex"]


def gen_path(n: int, label: str = "b") -> LabeledGraph:
    """Vertices ``1..n`` joined by edges ``(i, label, i+1)``."""
    if n < 1:
        raise ValueError("path length must be >= 1")
    return LabeledGraph.from_triples((str(i), label, str(i + 1)) for i in range(1, n))


def gen_two_cycles(n: int) -> LabeledGraph:
    """Two disjoint ``n``-cycles: ``a``+``b`` parallel edges on ``1..n`` and
    ``b``+``c`` parallel edges on ``1'..n'``."""
    if n < 2:
        raise ValueError("cycle length must be >= 2")
    triples = []
    for i in range(1, n + 1):
        j = i % n + 1
        triples += [(str(i), "a", str(j)), (str(i), "b", str(j))]
    for i in range(1, n + 1):
        j = i % n + 1
        triples += [(f"{i}'", "b", f"{j}'"), (f"{i}'", "c", f"{j}'")]
    return LabeledGraph.from_triples(triples)


def gen_random(v: int, e: int, alphabet: Sequence[str], seed: int) -> LabeledGraph:
    """``e`` distinct labeled edges drawn uniformly over ``v`` vertices.

    Vertex names are ``"1".."v"``; only drawn endpoints get registered.
    """
    alphabet = list(alphabet)
    total = v * v * len(alphabet)
    if v < 0 or e < 0 or e > total:
        raise ValueError(f"cannot draw {e} distinct edges from {total} candidates")
    rng = random.Random(seed)
    picks = rng.sample(range(total), e)
    k = len(alphabet)
    triples = []
    for code in picks:
        code, li = divmod(code, k)
        s, d = divmod(code, v)
        triples.append((str(s + 1), alphabet[li], str(d + 1)))
    return LabeledGraph.from_triples(triples)


def random_regex(rng: random.Random, alphabet: Sequence[str], depth: int) -> Node:
    """Random AST of nesting depth at most ``depth``."""
    if depth <= 1 or rng.random() < 0.3:
        return Symbol(rng.choice(list(alphabet)))
    kind = rng.choice(("concat", "union", "star"))
    if kind == "star":
        child = random_regex(rng, alphabet, depth - 1)
        return child if isinstance(child, Star) else Star(child)
    parts = [random_regex(rng, alphabet, depth - 1) for _ in range(rng.randint(2, 3))]
    return concat(*parts) if kind == "concat" else union(*parts)

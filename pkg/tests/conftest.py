import random
from collections import deque
from pathlib import Path

import pytest

from rpq.automaton import load_automaton
from rpq.generators import gen_random, random_regex

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def fig1_dfa():
    return load_automaton((DATA / "fig1_dfa.txt").read_text())


def random_instance(seed, max_vertices=8, max_edges=20, depth=4):
    """(graph, ast) drawn from the seeded randomized suite."""
    rng = random.Random(seed)
    v = rng.randint(1, max_vertices)
    k = rng.randint(1, 3)
    alphabet = "abc"[:k]
    e = rng.randint(0, min(max_edges, v * v * k))
    g = gen_random(v, e, alphabet, seed)
    return g, random_regex(rng, "abc", depth)


def bc_reach(g, x):
    """Brute-force b*c targets of x in a graph labeled over {a,b,c}."""
    fb = g.forward[g.label_id["b"]] if "b" in g.label_id else None
    fc = g.forward[g.label_id["c"]] if "c" in g.label_id else None
    seen = {x}
    todo = deque([x])
    while todo:
        z = todo.popleft()
        for w in (fb[z] if fb else ()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return {u for z in seen for u in (fc[z] if fc else ())}


def abc_bruteforce(g):
    """All (x, y) with an a b* c path, by composing single-label steps."""
    fa = g.forward[g.label_id["a"]] if "a" in g.label_id else [[] for _ in range(g.num_vertices)]
    out = set()
    for x in range(g.num_vertices):
        for y in fa[x]:
            out.update((x, u) for u in bc_reach(g, y))
    return out

import pytest

from conftest import random_instance
from rpq.automaton import Nfa, compile
from rpq.baseline import PgCounters, eval_pg, eval_pg_bidirectional
from rpq.generators import gen_path, gen_two_cycles
from rpq.graph import LabeledGraph, restrict_alphabet
from rpq.oracle import eval_matrix
from rpq.reduction import product_graph

BSTAR_C = Nfa(2, frozenset({0}), frozenset({1}), frozenset({(0, "b", 0), (0, "c", 1)}))
AB_STAR_C = Nfa(3, frozenset({0}), frozenset({2}),
                frozenset({(0, "a", 1), (1, "b", 1), (1, "c", 2)}))


@pytest.mark.parametrize("n", [2, 10, 200])
def test_path_forward_quadratic(n):
    c = PgCounters()
    assert eval_pg(gen_path(n), BSTAR_C, c) == set()
    assert c.bfs_edge_visits == n * (n - 1) // 2
    assert c.bfs_runs == n


def test_path_compiled_query_same_leading_term():
    n = 400
    c = PgCounters()
    assert eval_pg(gen_path(n), "b*c", c) == set()
    assert 1.0 <= c.bfs_edge_visits / (n * (n - 1) / 2) <= 1.0 + 4 / n


@pytest.mark.parametrize("n", [10, 200])
def test_path_backward_linear(n):
    c = PgCounters()
    assert eval_pg_bidirectional(gen_path(n), BSTAR_C, c) == set()
    assert c.backward_visits <= n


@pytest.mark.parametrize("n", [4, 30])
def test_two_cycles_bidi_quadratic(n):
    c = PgCounters()
    assert eval_pg_bidirectional(gen_two_cycles(n), AB_STAR_C, c) == set()
    # forward: N sources each reach N + 1 vertices of out-degree 1; backward symmetric
    assert c.forward_visits == n * (n + 1)
    assert c.backward_visits == n * (n + 1)
    assert c.combined() >= n * n


def test_single_edge():
    g = LabeledGraph.from_triples([("1", "d", "2")])
    assert eval_pg(g, "d") == {(0, 1)}
    assert eval_pg_bidirectional(g, "d") == {(0, 1)}


def test_empty_word_on_unmatched_vertex():
    g = LabeledGraph.from_triples([("1", "a", "2"), ("3", "b", "3")])
    expected = eval_matrix(g, "a*")
    assert eval_pg(g, "a*") == expected == eval_pg_bidirectional(g, "a*")
    assert (g.vertex_id["3"],) * 2 not in expected


@pytest.mark.parametrize("seed", range(300))
def test_engines_agree_and_counters_bounded(seed):
    g, ast = random_instance(seed)
    c1, c2 = PgCounters(), PgCounters()
    expected = eval_matrix(g, ast)
    assert eval_pg(g, ast, c1) == expected
    assert eval_pg_bidirectional(g, ast, c2) == expected
    m = compile(ast)
    pg = product_graph(restrict_alphabet(g, m.alphabet), m)
    bound = pg.num_vertices * len(pg.edges)
    assert c1.bfs_edge_visits <= bound
    assert c2.forward_visits <= bound and c2.backward_visits <= bound

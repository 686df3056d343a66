import random

import pytest

from conftest import DATA, random_instance
from rpq.automaton import Nfa, compile
from rpq.generators import gen_path, gen_two_cycles
from rpq.graph import LabeledGraph, load_edge_list, restrict_alphabet
from rpq.oracle import eval_matrix
from rpq.ospg import eval_abc
from rpq.reduction import A, B, C, build_abc_graph, product_graph, project_output


def nfa(n, starts, finals, transitions):
    return Nfa(n, frozenset(starts), frozenset(finals), frozenset(transitions))


BSTAR_C = nfa(2, {0}, {1}, {(0, "b", 0), (0, "c", 1)})
AB_STAR_C = nfa(3, {0}, {2}, {(0, "a", 1), (1, "b", 1), (1, "c", 2)})


@pytest.mark.parametrize("n", [1, 2, 7])
def test_path_product_edges(n):
    g = gen_path(n)
    pg = product_graph(g, BSTAR_C)
    vid = g.vertex_id
    expected = {((vid[str(i)], 0), (vid[str(i + 1)], 0)) for i in range(1, n)}
    assert pg.pairs() == expected


def test_empty_product():
    pg = product_graph(LabeledGraph([], [], []), BSTAR_C)
    assert pg.vertices == [] and pg.edges == []


def ex42():
    return load_edge_list((DATA / "ex42_graph.tsv").read_text())


def test_ex42_six_families(fig1_dfa):
    g = ex42()
    q0, q1, q2 = 0, 1, 2
    assert fig1_dfa.state_names == ("q0", "q1", "q2")

    def family(label, q, p):
        l = g.label_id[label]
        return {((v, q), (u, p)) for v, ll, u in g.edges if ll == l}

    expected = (family("d", q0, q0) | family("e", q0, q1) | family("g", q0, q2)
                | family("f", q1, q2) | family("e", q2, q1) | family("g", q2, q2))
    assert product_graph(g, fig1_dfa).pairs() == expected


def named_triples(gp):
    return set(gp.inner.triples())


def test_ex42_abc_matches_hand_assembled(fig1_dfa):
    gp = build_abc_graph(ex42(), fig1_dfa)
    expected = load_edge_list((DATA / "ex42_expected_abc.tsv").read_text())
    assert named_triples(gp) == set(expected.triples())


def test_two_cycles_b_edges():
    n = 5
    g = gen_two_cycles(n)
    gp = build_abc_graph(g, AB_STAR_C)
    vid = g.vertex_id
    expected = set()
    for i in range(1, n + 1):
        j = i % n + 1
        v, u = vid[str(i)], vid[str(j)]
        expected |= {((v, 0), (u, 1)), ((v, 1), (u, 1))}
        v, u = vid[f"{i}'"], vid[f"{j}'"]
        expected |= {((v, 1), (u, 1)), ((v, 1), (u, 2))}
    got = {((gp.origin[s], gp.state[s]), (gp.origin[d], gp.state[d]))
           for s, d in gp.labeled_edges(B)}
    assert got == expected


def test_loops_on_every_vertex():
    g = gen_two_cycles(4)
    gp = build_abc_graph(g, AB_STAR_C)
    a_loops = {(gp.origin[s], gp.state[s]) for s, d in gp.labeled_edges(A)}
    c_loops = {(gp.origin[s], gp.state[s]) for s, d in gp.labeled_edges(C)}
    assert a_loops == {(v, 0) for v in range(g.num_vertices)}
    assert c_loops == {(v, 2) for v in range(g.num_vertices)}


def test_no_finals_means_no_c_loops():
    m = nfa(2, {0}, set(), {(0, "b", 1)})
    gp = build_abc_graph(gen_path(4), m)
    assert gp.count(C) == 0
    assert gp.count(A) == 4


def test_project_output_dedups(fig1_dfa):
    gp = build_abc_graph(ex42(), fig1_dfa)
    idx = {name: i for i, name in enumerate(gp.inner.vertex_names)}
    pairs = {(idx["2@q0"], idx["4@q2"]), (idx["2@q2"], idx["4@q2"])}
    assert project_output(pairs, gp) == {(gp.origin[idx["2@q0"]], gp.origin[idx["4@q2"]])}
    assert project_output(set(), gp) == set()


@pytest.mark.parametrize("seed", range(20))
def test_project_output_size(seed, fig1_dfa):
    gp = build_abc_graph(ex42(), fig1_dfa)
    rng = random.Random(seed)
    n = gp.num_vertices
    pairs = {(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 30))}
    names = gp.inner.vertex_names
    brute = {(names[x].split("@")[0], names[y].split("@")[0]) for x, y in pairs}
    assert len(project_output(pairs, gp)) == len(brute)


@pytest.mark.parametrize("seed", range(300))
def test_reduction_sound_and_complete(seed):
    g, ast = random_instance(seed)
    m = compile(ast)
    rg = restrict_alphabet(g, m.alphabet)
    gp = build_abc_graph(rg, m)
    abc = eval_abc(gp)
    back = [g.vertex_id[name] for name in rg.vertex_names]
    got = {(back[u], back[v]) for u, v in project_output(abc, gp)}
    assert got == eval_matrix(g, ast)
    assert len(abc) <= m.num_states ** 2 * len(got)

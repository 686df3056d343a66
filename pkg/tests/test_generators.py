import random

import pytest

from rpq.generators import gen_path, gen_random, gen_two_cycles, random_regex
from rpq.graph import dump_edge_list
from rpq.ospg import eval_rpq
from rpq.regex import Symbol, node_kinds


def test_path_three():
    assert set(gen_path(3).triples()) == {("1", "b", "2"), ("2", "b", "3")}


def test_path_sizes():
    assert gen_path(1).num_edges == 0
    assert gen_path(1000).num_edges == 999
    assert gen_path(5, "a").label_names == ("a",)


def test_two_cycles_figure_instance():
    g = gen_two_cycles(6)
    assert g.num_vertices == 12 and g.num_edges == 24
    assert gen_two_cycles(2).num_edges == 8
    first = {(s, l, d) for s, l, d in g.triples() if not s.endswith("'")}
    assert {l for _, l, _ in first} == {"a", "b"}
    assert ("6", "a", "1") in first and ("6'", "c", "1'") in set(g.triples())


@pytest.mark.parametrize("n", [2, 3, 6, 25])
def test_two_cycles_output_empty(n):
    assert eval_rpq(gen_two_cycles(n), "ab*c") == set()


@pytest.mark.parametrize("call", [
    lambda: gen_path(0),
    lambda: gen_two_cycles(1),
    lambda: gen_random(2, 9, "ab", 0),
    lambda: gen_random(3, -1, "a", 0),
])
def test_argument_errors(call):
    with pytest.raises(ValueError):
        call()


def test_random_zero_edges():
    g = gen_random(5, 0, "a", 123)
    assert g.num_vertices == 0 and g.num_edges == 0


def test_random_deterministic():
    a = dump_edge_list(gen_random(5, 10, "ab", 42))
    b = dump_edge_list(gen_random(5, 10, "ab", 42))
    assert a == b
    assert a != dump_edge_list(gen_random(5, 10, "ab", 43))
    assert gen_random(5, 10, "ab", 42).num_edges == 10


def test_random_can_fill_everything():
    g = gen_random(3, 18, "ab", 7)
    assert g.num_edges == 18 and g.num_vertices == 3


def test_random_regex_depth_one_is_symbol():
    rng = random.Random(1)
    for _ in range(20):
        assert node_kinds(random_regex(rng, "ab", 1)) == {Symbol}


def test_random_regex_reproducible():
    a = [random_regex(random.Random(s), "abc", 4) for s in range(10)]
    b = [random_regex(random.Random(s), "abc", 4) for s in range(10)]
    assert a == b

import pytest
from hypothesis import given, settings, strategies as st

from rpq.graph import EdgeListError, LabeledGraph, dump_edge_list, load_edge_list, restrict_alphabet


def test_empty_stream():
    g = load_edge_list("")
    assert g.num_vertices == 0 and g.num_edges == 0


def test_adjacency_built():
    g = load_edge_list("1\tb\t2\n2\tb\t3\n")
    assert g.num_vertices == 3 and g.num_edges == 2
    b = g.label_id["b"]
    assert [g.vertex_names[v] for v in g.forward[b][g.vertex_id["1"]]] == ["2"]
    assert [g.vertex_names[v] for v in g.reverse[b][g.vertex_id["3"]]] == ["2"]


def test_duplicates_dropped():
    g = load_edge_list(b"1\tb\t2\n1\tb\t2\n")
    assert g.num_vertices == 2 and g.num_edges == 1


def test_comments_and_blank_lines():
    g = load_edge_list("# 9\tx\t10\n\n1\ta\t2\n   \n")
    assert g.vertex_names == ("1", "2")
    assert "9" not in g.vertex_id


@pytest.mark.parametrize("text,line", [
    ("1\ta\t2\n1\ta\n", 2),
    ("1\ta\t2\t3\n", 1),
    ("1\t\t2\n", 1),
])
def test_malformed_lines(text, line):
    with pytest.raises(EdgeListError) as err:
        load_edge_list(text)
    assert err.value.line == line


def test_ids_follow_first_appearance():
    g = load_edge_list("z\tq\ty\ny\tp\tx\n")
    assert g.vertex_names == ("z", "y", "x")
    assert g.label_names == ("q", "p")


def test_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        LabeledGraph(["1", "2", "3"], ["a"], [(0, 0, 1)])


def test_restrict_drops_edgeless_vertices():
    g = LabeledGraph.from_triples([("1", "d", "2"), ("2", "e", "3")])
    r = restrict_alphabet(g, {"e"})
    assert set(r.triples()) == {("2", "e", "3")}
    assert "1" not in r.vertex_id


def test_restrict_identity_and_empty():
    g = LabeledGraph.from_triples([("1", "d", "2"), ("2", "e", "3")])
    assert restrict_alphabet(g, {"d", "e"}) is g
    r = restrict_alphabet(LabeledGraph.from_triples([("1", "d", "2")]), {"e"})
    assert r.num_vertices == 0 and r.num_edges == 0


name = st.sampled_from(list("uvwxyz") + ["10", "n1"])
label = st.sampled_from(["a", "b", "c", "knows"])
triples = st.lists(st.tuples(name, label, name), max_size=30)


@given(triples)
def test_round_trip_is_stable(ts):
    g = load_edge_list("".join(f"{s}\t{l}\t{d}\n" for s, l, d in ts))
    once = dump_edge_list(g)
    again = load_edge_list(once)
    assert dump_edge_list(again) == once
    assert again.vertex_names == g.vertex_names


@given(triples)
def test_forward_reverse_transpose(ts):
    g = LabeledGraph.from_triples(ts)
    for l in range(len(g.label_names)):
        fwd = {(s, d) for s in range(g.num_vertices) for d in g.forward[l][s]}
        rev = {(s, d) for d in range(g.num_vertices) for s in g.reverse[l][d]}
        assert fwd == rev == {(s, d) for s, ll, d in g.edges if ll == l}


@settings(max_examples=50)
@given(triples, st.sets(label))
def test_restrict_edge_count(ts, keep):
    g = LabeledGraph.from_triples(ts)
    r = restrict_alphabet(g, keep)
    assert r.num_edges == sum(1 for _, l, _ in g.triples() if l in keep)
    touched = {v for s, _, d in r.triples() for v in (s, d)}
    assert set(r.vertex_names) == touched

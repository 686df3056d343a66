"""
Reducing a query to a b* c
==========================

Any regular path query can be rewritten as ``a b* c`` over a derived graph
whose vertices pair a graph vertex with an automaton state.
"""

# %%
from pathlib import Path

from rpq import build_abc_graph, eval_matrix, eval_rpq, load_automaton, load_edge_list

data = Path(__file__).resolve().parent.parent / "tests" / "data"
g = load_edge_list((data / "ex42_graph.tsv").read_text())
dfa = load_automaton((data / "fig1_dfa.txt").read_text())
print(g.num_vertices, "vertices,", g.num_edges, "edges, labels", g.label_names)

# %%
# b edges follow the product; a loops sit on start copies, c loops on final copies
gp = build_abc_graph(g, dfa)
print(gp)
for s, l, d in sorted(gp.inner.triples(), key=lambda t: (t[1], t[0], t[2])):
    print(f"  {s:>5} -{l}-> {d}")

# %%
# projecting the states away gives the answer on the original graph
q = "d*(e.f+g)*"
names = g.vertex_names
answer = sorted((names[u], names[v]) for u, v in eval_rpq(g, q))
print(q, "->", answer)
assert eval_rpq(g, q) == eval_matrix(g, q)

"""
An empty answer on a long path
==============================

A path of ``b`` edges has no ``b* c`` match. Per-source BFS still walks the
whole suffix from every vertex; capped reachability lists stay empty.
"""

# %%
from rpq.bench import fit_exponent
from rpq.engines import ENGINES
from rpq.generators import gen_path

sizes = [1000, 2000, 4000, 8000]
pg, ospg = [], []
for n in sizes:
    g = gen_path(n)
    out_pg, c_pg = ENGINES["pg"](g, "b*c")
    out_os, c_os = ENGINES["ospg"](g, "b*c")
    assert not out_pg and not out_os
    pg.append((n, c_pg["bfs_edge_visits"]))
    ospg.append((n, c_os["total_work"]))
    print(f"N={n:5d}  pg visits={c_pg['bfs_edge_visits']:>10d}  "
          f"ospg step1={c_os['step1_edge_checks']}  ospg total={c_os['total_work']}")

# %%
print("pg slope   %.3f" % fit_exponent(pg))
print("ospg slope %.3f" % fit_exponent(ospg))

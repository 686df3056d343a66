"""
Two cycles: when searching from both ends is not enough
=======================================================

Cycle one carries ``a`` and ``b`` edges, cycle two ``b`` and ``c``. The
query ``a b* c`` is empty, yet forward search saturates cycle one and
backward search saturates cycle two. The light/heavy split sees that every
cycle-two vertex is heavy and that no ``a`` edge points at one.
"""

# %%
from math import isqrt

from rpq.bench import fit_exponent
from rpq.engines import ENGINES
from rpq.generators import gen_two_cycles
from rpq.ospg import compute_bounded_reach, split_light_heavy
from rpq.reduction import abc_graph_from_labeled

g = gen_two_cycles(64)
gp = abc_graph_from_labeled(g)
s = split_light_heavy(compute_bounded_reach(gp), gp.num_edges)
print("|E| =", gp.num_edges, " cap =", isqrt(gp.num_edges) + 1)
print("light:", len(s.light), " heavy:", len(s.heavy), "of", g.num_vertices)

# %%
sizes = [256, 1024, 4096]
bidi, ospg = [], []
for n in sizes:
    g = gen_two_cycles(n)
    _, cb = ENGINES["pg-bidi"](g, "ab*c")
    _, co = ENGINES["ospg"](g, "ab*c")
    bidi.append((n, cb["total_work"]))
    ospg.append((n, co["total_work"]))
    print(f"N={n:5d}  pg-bidi={cb['total_work']:>10d}  ospg={co['total_work']:>10d}")
print("pg-bidi slope %.3f, ospg slope %.3f" % (fit_exponent(bidi), fit_exponent(ospg)))

"""
Semi-naive transitive closure
=============================

The linear rule extends the last delta by one edge; the binary rule joins
the delta with the closure itself, so path lengths double each round.
"""

# %%
from rpq import TcStats, tc_binary, tc_linear

for k in range(3, 8):
    path = {(i, i + 1) for i in range(2 ** k)}
    lin, bin_ = TcStats(), TcStats()
    assert tc_linear(path, lin) == tc_binary(path, bin_)
    print(f"d={2 ** k:4d}  linear iterations={lin.iterations:4d} work={lin.rule_work:7d}   "
          f"binary iterations={bin_.iterations:2d} work={bin_.rule_work:7d}")

# %%
# deltas partition the closure
st = TcStats(deltas=[])
t = tc_linear({(0, 1), (1, 2), (2, 0), (2, 3)}, st)
print(len(t), "pairs; delta sizes", st.delta_sizes)
assert sum(st.delta_sizes) == len(t)

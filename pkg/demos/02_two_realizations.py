"""Two ways to build a digraph with prescribed imbalances.

Run with ``python demos/02_two_realizations.py``.
"""

# %%
from collections import Counter

from imbalance import dominance_realize, greedy_realize, imbalance_sequence, multigraph_realize

a = [0, 3, -1, 1, -3, 2, -2, 0]

# %% Greedy: each removed head vertex points at the entries its reduction step bumped.
g = greedy_realize(a)
print("greedy arcs:", g.num_arcs())
print("imbalances: ", imbalance_sequence(g))
assert imbalance_sequence(g) == a

# %% Dominance descent: start from the transitive tournament, whose sequence
# (n-1, n-3, ..., -(n-1)) dominates every feasible one, and apply unit shifts.
g2, schedule = dominance_realize(a)
print("dominance arcs:", g2.num_arcs(), "after", len(schedule), "shifts")
print("cases used:", Counter(step.case.name for step in schedule.steps))
for c in schedule.replay()[:6]:
    print("  ", c)
assert imbalance_sequence(g2) == a

# %% Both realize the same sequence but generally differ as digraphs.
print("same arc set:", g.arcs == g2.arcs)

# %% With repeated arcs allowed, zero sum alone suffices.
m = multigraph_realize([4, -1, -3])
print(dict(m.arcs), imbalance_sequence(m))

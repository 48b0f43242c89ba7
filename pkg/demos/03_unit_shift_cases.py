"""The local rewirings behind a unit shift.

Moving one unit of imbalance from i to j uses a third vertex z in one of
three patterns. When i -> j is itself an arc, no such z may exist and the
arc is simply dropped.

Run with ``python demos/03_unit_shift_cases.py``.
"""

# %%
from imbalance import OrientedDigraph, imbalance_sequence, transitive_tournament, unit_shift

examples = {
    "out (i->z, z..j)": OrientedDigraph(3, [(0, 2)]),
    "through (i->z->j)": OrientedDigraph(3, [(0, 2), (2, 1)]),
    "in (i..z, z->j)": OrientedDigraph(3, [(2, 1)]),
    "direct (i->j only)": transitive_tournament(3),
}

for name, g in examples.items():
    h, case, z = unit_shift(g, 0, 1)
    print(f"{name:20s} {g.arcs} -> {h.arcs}   case={case.name} z={z}")
    print(f"{'':20s} b: {imbalance_sequence(g)} -> {imbalance_sequence(h)}")

# %% The shift refuses when b(i) <= b(j).
try:
    unit_shift(OrientedDigraph(3, [(0, 2)]), 1, 0)
except ValueError as exc:
    print("refused:", exc)

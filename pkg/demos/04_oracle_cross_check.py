"""Checking the feasibility test against exhaustive search.

Every oriented digraph on n vertices is enumerated (3 states per vertex
pair), its sorted imbalance sequence collected, and the collection compared
with the sequences the feasibility test accepts.

Run with ``python demos/04_oracle_cross_check.py``.
"""

# %%
import time

from imbalance import brute_force_realizable, enumerate_feasible, enumerate_zero_sum, is_feasible, realizable_sequences

for n in range(1, 6):
    t0 = time.perf_counter()
    seen = realizable_sequences(n)
    grid = list(enumerate_zero_sum(n))
    agree = all(bool(is_feasible(a)) == (a in seen) for a in grid)
    print(f"n={n}: {3 ** (n * (n - 1) // 2):6d} digraphs, {len(seen):3d} realizable of {len(grid):3d} "
          f"zero-sum sequences, agree={agree}  ({time.perf_counter() - t0:.2f} s)")

# %% First witness in canonical order for a single query.
print(brute_force_realizable([2, 1, -1, -2]))
print(brute_force_realizable([3, -1, -1, -1]))
print(brute_force_realizable([3, 0, -1, -2]))

# %% How many feasible sequences of each length.
print([sum(1 for _ in enumerate_feasible(n)) for n in range(9)])

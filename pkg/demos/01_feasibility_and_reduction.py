"""Feasibility and the greedy reduction, step by step.

Run with ``python demos/01_feasibility_and_reduction.py``.
"""

# %% A sequence is realizable exactly when, sorted non-increasingly, it sums
# to zero and its first k entries sum to at most k(n - k).
from itertools import accumulate

from imbalance import hat_reduce, is_feasible, normalize

a = normalize([2, -5, 3, 2, 5, -6, 2, 2, -5])
print("sorted:   ", a.values)
print("from pos: ", a.sort_perm)

n = len(a)
for k, s in enumerate(accumulate(a.values), start=1):
    print(f"k={k}  prefix={s:3d}  bound={k * (n - k):3d}")
print(is_feasible(a))

# %% Failures name the first violated constraint; a nonzero sum wins over prefixes.
for bad in ([2, -2], [1, 1, -1], [3, 3, 0, -6]):
    print(bad, "->", is_feasible(bad))

# %% One reduction step deletes the head and adds 1 to the head-many smallest
# entries. On a split run of equal values the +1s land on the LEFT of the run,
# leaving a gap of zeros, so the result stays non-increasing.
trace = hat_reduce(a)
print("a   ", *a.values)
print("+   .", *trace.augmented)
print("a'  .", *trace.result.values)

# %% Repeating the step walks down to the empty sequence, feasible at every level.
current = a
while len(current):
    current = hat_reduce(current).result
    print(f"{str(current.values):40s} {is_feasible(current)}")

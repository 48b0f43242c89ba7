"""Ground truth for small n.

Nothing here calls the feasibility test or the realizers. The brute-force
search walks every oriented digraph on ``n`` vertices: each unordered pair
``(u, v)``, ``u < v``, in lexicographic order, is one base-3 digit
(0 = no arc, 1 = ``u -> v``, 2 = ``v -> u``), first pair most significant.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .digraph import OrientedDigraph, imbalance_sequence

__all__ = [
    "ORACLE_CAP",
    "ENUMERATE_CAP",
    "brute_force_realizable",
    "realizable_sequences",
    "enumerate_feasible",
    "enumerate_zero_sum",
    "random_digraph",
    "random_feasible",
]

ORACLE_CAP = 6
ENUMERATE_CAP = 8
_CHUNK = 1 << 18


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds cap {cap}")


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = list(combinations(range(n), 2))
    us = np.array([u for u, _ in pairs], dtype=np.intp)
    vs = np.array([v for _, v in pairs], dtype=np.intp)
    return us, vs


def _chunk_imbalances(n: int, us, vs, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Pair states and imbalance rows for codes ``lo..hi-1``."""
    m = len(us)
    codes = np.arange(lo, hi, dtype=np.int64)
    states = np.empty((hi - lo, m), dtype=np.int8)
    for t in range(m - 1, -1, -1):
        states[:, t] = codes % 3
        codes //= 3
    sign = (states == 1).astype(np.int16) - (states == 2).astype(np.int16)
    b = np.zeros((hi - lo, n), dtype=np.int16)
    for t in range(m):
        b[:, us[t]] += sign[:, t]
        b[:, vs[t]] -= sign[:, t]
    return states, b


def _digraph_from_states(n: int, states: np.ndarray) -> OrientedDigraph:
    g = OrientedDigraph(n)
    for (u, v), s in zip(combinations(range(n), 2), states):
        if s == 1:
            g.add_arc(u, v)
        elif s == 2:
            g.add_arc(v, u)
    return g


def brute_force_realizable(a: Sequence[int], cap: int = ORACLE_CAP) -> OrientedDigraph | None:
    """First oriented digraph, in canonical order, whose sorted imbalances match sorted ``a``."""
    n = len(a)
    _check_cap(n, cap)
    target = np.array(sorted((int(x) for x in a), reverse=True), dtype=np.int16)
    if n == 0:
        return OrientedDigraph(0)
    us, vs = _pair_arrays(n)
    total = 3 ** len(us)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        states, b = _chunk_imbalances(n, us, vs, lo, hi)
        b = -np.sort(-b, axis=1)
        hit = np.flatnonzero(np.all(b == target, axis=1))
        if hit.size:
            g = _digraph_from_states(n, states[hit[0]])
            assert sorted(imbalance_sequence(g), reverse=True) == target.tolist()
            return g
    return None


@lru_cache(maxsize=None)
def realizable_sequences(n: int, cap: int = ORACLE_CAP) -> frozenset[tuple[int, ...]]:
    """Every sorted imbalance sequence of some oriented digraph on ``n`` vertices."""
    _check_cap(n, cap)
    if n == 0:
        return frozenset({()})
    us, vs = _pair_arrays(n)
    total = 3 ** len(us)
    found: set[tuple[int, ...]] = set()
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        _, b = _chunk_imbalances(n, us, vs, lo, hi)
        b = np.unique(-np.sort(-b, axis=1), axis=0)
        found.update(tuple(int(x) for x in row) for row in b)
    return frozenset(found)


def _non_increasing_zero_sum(n: int, feasible_only: bool) -> Iterator[tuple[int, ...]]:
    lo_val = -(n - 1)
    prefix: list[int] = []

    def extend(pos: int, ceiling: int, s: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if s == 0:
                yield tuple(prefix)
            return
        remaining = n - pos - 1
        for v in range(ceiling, lo_val - 1, -1):
            s2 = s + v
            # later entries lie in [lo_val, v]
            if s2 + remaining * v < 0:
                break
            if s2 + remaining * lo_val > 0:
                continue
            k = pos + 1
            if feasible_only and s2 > k * (n - k):
                continue
            prefix.append(v)
            yield from extend(pos + 1, v, s2)
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from extend(0, n - 1, 0)


def enumerate_feasible(n: int, cap: int = ENUMERATE_CAP) -> Iterator[tuple[int, ...]]:
    """Feasible sequences of length ``n`` in lexicographically decreasing order."""
    _check_cap(n, cap)
    return _non_increasing_zero_sum(n, feasible_only=True)


def enumerate_zero_sum(n: int, cap: int = ENUMERATE_CAP) -> Iterator[tuple[int, ...]]:
    """All non-increasing zero-sum sequences with entries in ``[-(n-1), n-1]``."""
    _check_cap(n, cap)
    return _non_increasing_zero_sum(n, feasible_only=False)


def random_digraph(n: int, rng: random.Random | None = None, density: float | None = None) -> OrientedDigraph:
    """Oriented digraph with a random arc density and a random bias toward a hidden ranking.

    The bias spreads imbalances across the whole feasible range instead of
    concentrating them near zero.
    """
    rng = rng or random.Random()
    gen = np.random.default_rng(rng.getrandbits(64))
    density = rng.random() if density is None else density
    bias = rng.random()
    rank = gen.permutation(n)
    present = np.triu(gen.random((n, n)) < density, k=1)
    forward = gen.random((n, n)) < 0.5 + 0.5 * bias
    lower_first = rank[:, None] < rank[None, :]
    orient = np.where(forward == lower_first, 1, -1).astype(np.int8)
    upper = np.where(present, orient, 0).astype(np.int8)
    return OrientedDigraph.from_matrix(upper - upper.T)


def random_feasible(n: int, rng: random.Random | None = None) -> tuple[int, ...]:
    """Sorted imbalance sequence of :func:`random_digraph` (realizable, hence feasible)."""
    return tuple(sorted(imbalance_sequence(random_digraph(n, rng)), reverse=True))

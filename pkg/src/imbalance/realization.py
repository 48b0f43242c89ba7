"""Constructive realizations of imbalance sequences.

Three routes:

* :func:`greedy_realize` repeats the hat reduction; each removed head
  vertex sends arcs to exactly the positions that were augmented.
* :func:`dominance_realize` starts from the transitive tournament and walks
  down the dominance order by unit shifts, each applied to the digraph by
  :func:`unit_shift`.
* :func:`multigraph_realize` pairs surplus with deficit when repeated arcs
  are allowed.

Vertices of a returned digraph are in the caller's original order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import IntEnum
from itertools import accumulate
from typing import Sequence

import numpy as np

from .digraph import MultiDigraph, OrientedDigraph, transitive_tournament
from .sequences import (
    FeasibilityReport,
    ImbalanceSequence,
    SequenceLike,
    _hat_step,
    as_sequence,
    is_feasible,
)

__all__ = [
    "ShiftCase",
    "ShiftStep",
    "ShiftSchedule",
    "NoWitnessError",
    "greedy_realize",
    "unit_shift",
    "shift_schedule",
    "dominance_realize",
    "multigraph_realize",
]


class ShiftCase(IntEnum):
    """Local rewirings that move one unit of imbalance from ``i`` to ``j``.

    The first three use a witness ``z``:

    * OUT:     i -> z, z -- j absent   becomes   i -- z absent, j -> z
    * THROUGH: i -> z -> j             becomes   both arcs removed
    * IN:      i -- z absent, z -> j   becomes   z -> i, z -- j absent

    DIRECT removes an arc ``i -> j``; it is used only when no witness exists,
    which happens exactly when ``i -> j`` is present and ``b(i) - b(j) <= 2``.
    """

    OUT = 1
    THROUGH = 2
    IN = 3
    DIRECT = 4


ARC_DELTA = {ShiftCase.OUT: 0, ShiftCase.THROUGH: -2, ShiftCase.IN: 0, ShiftCase.DIRECT: -1}


class NoWitnessError(RuntimeError):
    """No rewiring found although ``b(i) > b(j)``; indicates a broken invariant."""


@dataclass(frozen=True)
class ShiftStep:
    i: int
    j: int
    z: int | None
    case: ShiftCase


@dataclass
class ShiftSchedule:
    start: ImbalanceSequence
    end: ImbalanceSequence
    steps: list[ShiftStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self) -> list[tuple[int, ...]]:
        """Every sequence visited, from ``start`` to ``end`` inclusive."""
        c = list(self.start.values)
        seen = [tuple(c)]
        for step in self.steps:
            c[step.i] -= 1
            c[step.j] += 1
            seen.append(tuple(c))
        return seen


def greedy_realize(a: SequenceLike) -> OrientedDigraph | FeasibilityReport:
    """Realize ``a`` by repeated hat reduction, or report why it is infeasible.

    Sorted position ``l`` is the head at level ``l``; it gets an out-arc to
    every later position the reduction augmented.
    """
    seq = as_sequence(a)
    report = is_feasible(seq)
    if not report:
        return report
    n = len(seq)
    adj = np.zeros((n, n), dtype=np.int8)
    current = list(seq.values)
    for level in range(n):
        _, aug, current = _hat_step(current)
        targets = level + 1 + np.flatnonzero(aug)
        adj[level, targets] = 1
        adj[targets, level] = -1
    return OrientedDigraph.from_matrix(adj).relabel(seq.sort_perm)


def _find_rewiring(adj: np.ndarray, i: int, j: int) -> tuple[ShiftCase, int | None]:
    ri = adj[i]
    rj = adj[j]
    # The three witness patterns are exactly the z with adj[i, z] > adj[j, z].
    mask = ri > rj
    mask[i] = mask[j] = False
    hits = np.flatnonzero(mask)
    if hits.size:
        z = int(hits[0])
        if ri[z] == 1:
            return (ShiftCase.OUT if rj[z] == 0 else ShiftCase.THROUGH), z
        return ShiftCase.IN, z
    if adj[i, j] == 1:
        return ShiftCase.DIRECT, None
    raise NoWitnessError(f"no rewiring for shift ({i}, {j})")


def _apply_shift(adj: np.ndarray, i: int, j: int) -> tuple[ShiftCase, int | None]:
    case, z = _find_rewiring(adj, i, j)
    if case is ShiftCase.OUT:
        adj[i, z] = adj[z, i] = 0
        adj[j, z], adj[z, j] = 1, -1
    elif case is ShiftCase.THROUGH:
        adj[i, z] = adj[z, i] = 0
        adj[z, j] = adj[j, z] = 0
    elif case is ShiftCase.IN:
        adj[z, j] = adj[j, z] = 0
        adj[z, i], adj[i, z] = 1, -1
    else:
        adj[i, j] = adj[j, i] = 0
    return case, z


def unit_shift(g: OrientedDigraph, i: int, j: int) -> tuple[OrientedDigraph, ShiftCase, int | None]:
    """Lower ``b(i)`` by one and raise ``b(j)`` by one, leaving ``g`` untouched.

    Witnesses are scanned in ascending vertex order; the first ``z`` matching
    any of the three witness patterns wins.

    Returns:
        The rewired copy, the case that fired and the witness (``None`` for
        :attr:`ShiftCase.DIRECT`).
    Raises:
        ValueError: if ``i == j``, a vertex is out of range, or ``b(i) <= b(j)``.
    """
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"vertices ({i}, {j}) out of range for n={g.n}")
    if i == j:
        raise ValueError("unit shift needs two distinct vertices")
    bi = int(g.adj[i].sum(dtype=np.int64))
    bj = int(g.adj[j].sum(dtype=np.int64))
    if bi <= bj:
        raise ValueError(f"unit shift needs b({i}) > b({j}), got {bi} <= {bj}")
    h = g.copy()
    case, z = _apply_shift(h.adj, i, j)
    return h, case, z


def shift_schedule(start: Sequence[int], target: Sequence[int]) -> list[tuple[int, int]]:
    """Unit shifts ``(i, j)``, ``i < j``, turning ``start`` into ``target``.

    Both must be non-increasing with equal sums and ``start`` must dominate
    ``target``. Each shift takes the right end of the leftmost run of
    ``start`` lying above ``target`` and the left end of the run that closes
    the gap, so every intermediate sequence stays non-increasing and keeps
    dominating ``target``.
    """
    c = list(start)
    t = list(target)
    n = len(c)
    if len(t) != n:
        raise ValueError("length mismatch")
    gap = [x - y for x, y in zip(accumulate(c), accumulate(t))]
    if n and gap[-1] != 0:
        raise ValueError("start and target have different sums")
    if any(d < 0 for d in gap):
        raise ValueError("start does not dominate target")
    shifts = []
    p = 0
    while True:
        while p < n and gap[p] == 0:
            p += 1
        if p >= n:
            return shifts
        q = p + 1
        while gap[q] > 0:
            q += 1
        i = p
        while c[i + 1] == c[p]:
            i += 1
        j = q
        while c[j - 1] == c[q]:
            j -= 1
        c[i] -= 1
        c[j] += 1
        for k in range(i, j):
            gap[k] -= 1
        shifts.append((i, j))


def dominance_realize(
    a: SequenceLike,
) -> tuple[OrientedDigraph, ShiftSchedule] | FeasibilityReport:
    """Realize ``a`` by unit shifts down from the transitive tournament.

    The schedule is expressed in sorted positions, which are also the
    vertices of the tournament being rewired; the returned digraph is
    relabelled to caller order.
    """
    seq = as_sequence(a)
    report = is_feasible(seq)
    if not report:
        return report
    n = len(seq)
    g = transitive_tournament(n)
    start = ImbalanceSequence(tuple(n - 1 - 2 * v for v in range(n)))
    schedule = ShiftSchedule(start, ImbalanceSequence(seq.values))
    for i, j in shift_schedule(start.values, seq.values):
        case, z = _apply_shift(g.adj, i, j)
        schedule.steps.append(ShiftStep(i, j, z, case))
    return g.relabel(seq.sort_perm), schedule


def multigraph_realize(a: Sequence[int]) -> MultiDigraph:
    """Realize any zero-sum sequence with repeated arcs allowed.

    Repeatedly joins the largest surplus to the largest deficit (ties to
    the lower index) with multiplicity ``min(surplus, deficit)``.
    """
    values = [int(v) for v in a]
    total = sum(values)
    if total != 0:
        raise ValueError(f"multigraph realization needs zero sum, got {total}")
    surplus = [(-v, i) for i, v in enumerate(values) if v > 0]
    deficit = [(v, i) for i, v in enumerate(values) if v < 0]
    heapq.heapify(surplus)
    heapq.heapify(deficit)
    g = MultiDigraph(len(values))
    while surplus:
        s, u = heapq.heappop(surplus)
        d, v = heapq.heappop(deficit)
        mult = min(-s, -d)
        g.arcs[(u, v)] += mult
        if -s > mult:
            heapq.heappush(surplus, (s + mult, u))
        if -d > mult:
            heapq.heappush(deficit, (d + mult, v))
    return g

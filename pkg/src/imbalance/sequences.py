"""Sequence-level machinery for imbalance sequences.

Everything here works on plain integer sequences: feasibility testing,
the greedy one-step reduction (the "hat" operation), the dominance order
and the strengthened prefix bound over constant runs.

Positions in :class:`ImbalanceSequence` are 0-based. Prefix bounds are
stated for prefix *lengths* ``k`` (``1 <= k <= n``), so ``prefix(k)`` is
the sum of the first ``k`` entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "ImbalanceSequence",
    "NonZeroSum",
    "PrefixViolation",
    "FeasibilityReport",
    "HatTrace",
    "InfeasibleSequenceError",
    "normalize",
    "as_sequence",
    "is_feasible",
    "hat_reduce",
    "run_bound",
    "dominates",
    "tournament_sequence",
]


@dataclass(frozen=True)
class ImbalanceSequence:
    """A non-increasing integer sequence together with its sort provenance.

    ``sort_perm[p]`` is the caller's original position of sorted entry ``p``.
    """

    values: tuple[int, ...]
    sort_perm: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.sort_perm is None:
            object.__setattr__(self, "sort_perm", tuple(range(len(values))))
        else:
            object.__setattr__(self, "sort_perm", tuple(int(p) for p in self.sort_perm))
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"values must be non-increasing, got {values}")
        if sorted(self.sort_perm) != list(range(len(values))):
            raise ValueError(f"sort_perm is not a permutation of 0..{len(values) - 1}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def original(self) -> list[int]:
        """The values in the caller's original order."""
        out = [0] * len(self.values)
        for p, orig in enumerate(self.sort_perm):
            out[orig] = self.values[p]
        return out

    def prefix_sums(self) -> list[int]:
        return list(accumulate(self.values))


SequenceLike = Union[ImbalanceSequence, Sequence[int]]


@dataclass(frozen=True)
class NonZeroSum:
    total: int

    def __str__(self) -> str:
        return f"sum = {self.total}"


@dataclass(frozen=True)
class PrefixViolation:
    k: int
    prefix_sum: int
    bound: int

    def __str__(self) -> str:
        return f"prefix k={self.k} sum {self.prefix_sum} > {self.bound}"


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    failure: NonZeroSum | PrefixViolation | None = None

    def __post_init__(self) -> None:
        if self.feasible != (self.failure is None):
            raise ValueError("feasible must be True exactly when failure is None")

    def __bool__(self) -> bool:
        return self.feasible

    def __str__(self) -> str:
        return "FEASIBLE" if self.feasible else f"INFEASIBLE: {self.failure}"


@dataclass(frozen=True)
class HatTrace:
    """One greedy reduction step.

    ``augmented[t]`` is 1 when input position ``t + 1`` received +1;
    ``result[t]`` is the new value at that same position.
    """

    head: int
    augmented: tuple[int, ...]
    result: ImbalanceSequence


class InfeasibleSequenceError(ValueError):
    def __init__(self, report: FeasibilityReport):
        super().__init__(str(report))
        self.report = report


def normalize(raw: Iterable[int]) -> ImbalanceSequence:
    """Stable descending sort of ``raw``, remembering where each entry came from."""
    raw = [int(v) for v in raw]
    order = sorted(range(len(raw)), key=lambda i: -raw[i])
    return ImbalanceSequence(tuple(raw[i] for i in order), tuple(order))


def as_sequence(a: SequenceLike) -> ImbalanceSequence:
    if isinstance(a, ImbalanceSequence):
        return a
    return normalize(a)


def is_feasible(a: SequenceLike) -> FeasibilityReport:
    """Zero sum and ``prefix(k) <= k(n-k)`` for every ``1 <= k <= n``.

    A nonzero sum is reported in preference to a prefix violation; among
    prefix violations the smallest ``k`` is reported.
    """
    values = as_sequence(a).values
    n = len(values)
    total = sum(values)
    if total != 0:
        return FeasibilityReport(False, NonZeroSum(total))
    s = 0
    for k, v in enumerate(values, start=1):
        s += v
        bound = k * (n - k)
        if s > bound:
            return FeasibilityReport(False, PrefixViolation(k, s, bound))
    return FeasibilityReport(True)


def _hat_step(values: Sequence[int]) -> tuple[int, list[int], list[int]]:
    # Caller guarantees 0 <= head <= n - 1 and values non-increasing.
    head = values[0]
    rest = list(values[1:])
    m = len(rest)
    aug = [0] * m
    if head > 0:
        threshold = rest[m - head]
        below = m
        while below > 0 and rest[below - 1] < threshold:
            below -= 1
        # rest[below:] lies strictly under the threshold and all get +1;
        # the remainder goes to the LEFT end of the threshold run.
        need = head - (m - below)
        start = below
        while start > 0 and rest[start - 1] == threshold:
            start -= 1
        for t in range(start, start + need):
            aug[t] = 1
        for t in range(below, m):
            aug[t] = 1
    result = [v + d for v, d in zip(rest, aug)]
    return head, aug, result


def hat_reduce(a: SequenceLike) -> HatTrace:
    """Delete the head and add 1 to the ``head`` smallest remaining entries.

    "Smaller" breaks ties toward the lower index, so a split run of equal
    values is incremented on its left end and the result stays
    non-increasing.

    Raises:
        InfeasibleSequenceError: if ``a`` is not feasible.
        ValueError: if ``a`` is empty.
    """
    seq = as_sequence(a)
    if len(seq) == 0:
        raise ValueError("hat_reduce needs at least one entry")
    report = is_feasible(seq)
    if not report:
        raise InfeasibleSequenceError(report)
    head, aug, result = _hat_step(seq.values)
    return HatTrace(head, tuple(aug), ImbalanceSequence(tuple(result)))


def run_bound(a: SequenceLike, k: int, m: int) -> int:
    """Strengthened bound ``k(n-k) - m`` on ``prefix(k)``.

    Valid for a feasible sequence whose entries at (1-based) positions
    ``k, k+1, ..., k+m`` are all equal.
    """
    values = as_sequence(a).values
    n = len(values)
    if k < 1 or m < 0 or k + m > n:
        raise ValueError(f"positions {k}..{k + m} out of range for n={n}")
    run = values[k - 1 : k + m]
    if any(v != run[0] for v in run):
        raise ValueError(f"positions {k}..{k + m} are not a constant run: {run}")
    return k * (n - k) - m


def dominates(a: SequenceLike, b: SequenceLike) -> bool:
    """Whether every prefix sum of ``a`` is at least that of ``b``."""
    av = as_sequence(a).values
    bv = as_sequence(b).values
    if len(av) != len(bv):
        raise ValueError(f"length mismatch: {len(av)} != {len(bv)}")
    if sum(av) != 0 or sum(bv) != 0:
        raise ValueError("dominance order is defined on zero-sum sequences")
    return all(x >= y for x, y in zip(accumulate(av), accumulate(bv)))


def tournament_sequence(n: int) -> ImbalanceSequence:
    """``(n-1, n-3, ..., -(n-1))``, the maximum of the dominance order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return ImbalanceSequence(tuple(n - 1 - 2 * i for i in range(n)))

"""Feasibility testing and explicit realization of digraph imbalance sequences.

A vertex's imbalance is its out-degree minus its in-degree. An integer
sequence is the imbalance sequence of a digraph without repeated arcs
exactly when, sorted non-increasingly, it sums to zero and its first ``k``
entries sum to at most ``k(n - k)``.
"""

from .digraph import (
    DigraphError,
    MultiDigraph,
    OrientedDigraph,
    imbalance_sequence,
    transitive_tournament,
)
from .oracle import (
    brute_force_realizable,
    enumerate_feasible,
    enumerate_zero_sum,
    random_digraph,
    random_feasible,
    realizable_sequences,
)
from .realization import (
    NoWitnessError,
    ShiftCase,
    ShiftSchedule,
    ShiftStep,
    dominance_realize,
    greedy_realize,
    multigraph_realize,
    shift_schedule,
    unit_shift,
)
from .sequences import (
    FeasibilityReport,
    HatTrace,
    ImbalanceSequence,
    InfeasibleSequenceError,
    NonZeroSum,
    PrefixViolation,
    dominates,
    hat_reduce,
    is_feasible,
    normalize,
    run_bound,
    tournament_sequence,
)

__version__ = "0.1.0"

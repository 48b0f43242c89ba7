from itertools import product

import pytest

from imbalance import (
    brute_force_realizable,
    enumerate_feasible,
    enumerate_zero_sum,
    imbalance_sequence,
    is_feasible,
    realizable_sequences,
)


def grid_zero_sum(n):
    """Brute-force reference for enumerate_zero_sum: filter the full product grid."""
    out = set()
    for a in product(range(-(n - 1), n), repeat=n):
        if sum(a) == 0:
            out.add(tuple(sorted(a, reverse=True)))
    return out


def test_two_vertices():
    g = brute_force_realizable((1, -1))
    assert g.arcs == [(0, 1)]
    assert brute_force_realizable((2, -2)) is None


def test_three_vertices_first_witness():
    g = brute_force_realizable((1, 1, -2))
    assert g.arcs == [(0, 2), (1, 2)]


def test_unsorted_query_and_nonzero_sum():
    g = brute_force_realizable((-2, 1, 1))
    assert sorted(imbalance_sequence(g)) == [-2, 1, 1]
    assert brute_force_realizable((1, 0)) is None


def test_empty():
    assert brute_force_realizable(()).n == 0
    assert realizable_sequences(0) == frozenset({()})


def test_cap():
    with pytest.raises(ValueError):
        brute_force_realizable((0,) * 7)
    with pytest.raises(ValueError):
        list(enumerate_feasible(9))
    assert list(enumerate_feasible(9, cap=9))[0] == tuple(8 - 2 * k for k in range(9))


@pytest.mark.parametrize("n", range(0, 5))
def test_realizable_sequences_matches_single_queries(n):
    seen = realizable_sequences(n)
    for a in enumerate_zero_sum(n):
        assert (brute_force_realizable(a) is not None) == (a in seen)


def test_enumerate_small():
    assert list(enumerate_feasible(1)) == [(0,)]
    assert list(enumerate_feasible(2)) == [(1, -1), (0, 0)]
    assert list(enumerate_feasible(3)) == [(2, 0, -2), (2, -1, -1), (1, 1, -2), (1, 0, -1), (0, 0, 0)]


# frozen from the enumeration; the n <= 5 values are also |realizable_sequences(n)|
FEASIBLE_COUNTS = {0: 1, 1: 1, 2: 2, 3: 5, 4: 16, 5: 59, 6: 247, 7: 1111, 8: 5302}


@pytest.mark.parametrize("n", range(0, 9))
def test_feasible_counts(n):
    assert sum(1 for _ in enumerate_feasible(n)) == FEASIBLE_COUNTS[n]


@pytest.mark.parametrize("n", range(0, 6))
def test_counts_agree_with_brute_force(n):
    assert len(realizable_sequences(n)) == FEASIBLE_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerations_complete(n):
    zs = list(enumerate_zero_sum(n))
    assert len(zs) == len(set(zs))
    assert set(zs) == grid_zero_sum(n)
    assert zs == sorted(zs, reverse=True)
    feas = list(enumerate_feasible(n))
    assert feas == [a for a in zs if is_feasible(a)]
    assert tuple(n - 1 - 2 * k for k in range(n)) in feas
    assert (0,) * n in feas


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_equivalence(n):
    seen = realizable_sequences(n)
    for a in enumerate_zero_sum(n):
        assert bool(is_feasible(a)) == (a in seen)

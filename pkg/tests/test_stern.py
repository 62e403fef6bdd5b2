"""Stern sequence evaluator against its defining recurrence."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sternbsd import stern, stern_pair

from oracles import stern_table

# 0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5 is the opening run of the sequence
OPENING = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5]


def test_opening_values():
    assert [stern(n) for n in range(14)] == OPENING


@pytest.mark.parametrize("n, expected", [(0, 0), (5, 3), (13, 5)])
def test_known_values(n, expected):
    assert stern(n) == expected


@pytest.mark.parametrize("n, expected", [(0, (0, 1)), (5, (3, 2)), (13, (5, 3))])
def test_known_pairs(n, expected):
    assert stern_pair(n) == expected


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        stern(-1)
    with pytest.raises(ValueError):
        stern_pair(-7)


def test_powers_of_two_evaluate_to_one():
    # repeated halving lands on s(1)
    assert all(stern(1 << k) == 1 for k in range(65))


def test_matches_recurrence_table_up_to_2_pow_16():
    table = stern_table(2**16 + 1)
    for n in range(2**16 + 1):
        assert stern(n) == table[n]


def test_pair_consistent_with_single_evaluation():
    for n in range(0, 4097):
        assert stern_pair(n) == (stern(n), stern(n + 1))


@given(st.integers(min_value=0, max_value=10**30))
@settings(max_examples=200)
def test_recurrence_holds_at_scale(n):
    assert stern(2 * n) == stern(n)
    assert stern(2 * n + 1) == stern(n) + stern(n + 1)


@given(st.integers(min_value=0, max_value=10**30))
@settings(max_examples=200)
def test_pair_is_consecutive(n):
    a, b = stern_pair(n)
    assert a == stern(n)
    assert b == stern(n + 1)

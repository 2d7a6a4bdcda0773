import time

import pytest

from squared_squares import BudgetExceeded, SearchOptions, enumerate_squares
from squared_squares.oracle import MAX_N, OracleLimitError, naive_enumerate

from .oracles import count_square_tilings


@pytest.mark.parametrize("n", range(1, 6))
def test_all_tilings_match_profile_dp(n):
    assert naive_enumerate(n, include_trivial=True).raw_count == count_square_tilings(n) - 1


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_sets_agree_with_enumerator(n):
    mine = naive_enumerate(n, include_trivial=True, collect="all_labeled")
    theirs = enumerate_squares(n, SearchOptions.all_tilings(collect="all_labeled"))
    assert mine.labeled == theirs.labeled
    assert mine.canonical_keys == theirs.canonical_keys


@pytest.mark.parametrize("n", [11, 16])
def test_nontrivial_mode_finds_reference(n, eleven, sixteen):
    r = naive_enumerate(n, collect="all_labeled")
    assert r.canonical_count == 1 and r.raw_count == 2
    assert {11: eleven, 16: sixteen}[n] in r.labeled


def test_limits():
    with pytest.raises(OracleLimitError):
        naive_enumerate(MAX_N + 1)
    with pytest.raises(OracleLimitError):
        naive_enumerate(0)
    with pytest.raises(BudgetExceeded):
        naive_enumerate(7, include_trivial=True, deadline=time.monotonic())


@pytest.mark.parametrize("n", range(13, 18))
def test_nontrivial_mode_agrees_beyond_twelve(n):
    mine = naive_enumerate(n, collect="all_labeled")
    theirs = enumerate_squares(n, SearchOptions(collect="all_labeled"))
    assert mine.labeled == theirs.labeled

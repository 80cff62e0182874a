from math import comb

import pytest

from jetfock.multiindex import (
    count_multi_indices,
    mi_abs,
    mi_add,
    mi_sub,
    mi_unit,
    multi_binomial,
    multi_indices,
)


def test_enumeration_small_cases():
    assert multi_indices(2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert multi_indices(1, 0) == [(0,)]
    assert len(multi_indices(3, 2)) == 10


def test_enumeration_counts_match_binomial():
    for N in range(1, 5):
        for p in range(5):
            got = multi_indices(N, p)
            assert len(got) == comb(N + p, p) == count_multi_indices(N, p)
            assert len(set(got)) == len(got)
            grades = [mi_abs(m) for m in got]
            assert grades == sorted(grades)


def test_multi_binomial_values():
    assert multi_binomial((2, 1), (1, 0)) == 2
    assert multi_binomial((3, 2), (3, 2)) == 1
    assert multi_binomial((1, 0), (0, 2)) == 0
    assert multi_binomial((2,), (-1,)) == 0


def test_binomial_row_sums():
    # sum over m <= n of binom(n, m) = 2^{|n|} componentwise
    for n in [(3,), (6,), (2, 3), (1, 2, 2)]:
        N = len(n)
        p = mi_abs(n)
        total = sum(multi_binomial(n, m) for m in multi_indices(N, p))
        assert total == 2 ** mi_abs(n)


def test_sub_and_unit():
    assert mi_sub((2, 1), (1, 1)) == (1, 0)
    assert mi_sub((2, 1), (1, 2)) is None
    assert mi_add((1, 0), mi_unit(2, 1)) == (1, 1)


def test_validation():
    with pytest.raises(ValueError):
        multi_indices(0, 1)
    with pytest.raises(ValueError):
        multi_indices(2, -1)

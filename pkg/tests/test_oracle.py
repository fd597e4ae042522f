from math import comb

import pytest

from covariants.oracle import dim_covariants, partition_count


def brute_partitions(d, n, w):
    """Enumerate partitions of w into at most n parts, each at most d."""
    def count(remaining, parts_left, largest):
        if remaining == 0:
            return 1
        if parts_left == 0 or largest == 0:
            return 0
        return sum(
            count(remaining - part, parts_left - 1, part)
            for part in range(1, min(largest, remaining) + 1)
        )

    return count(w, n, d)


def test_examples():
    assert partition_count(2, 2, 2) == 2
    assert partition_count(3, 3, 4) == 3
    for d in range(6):
        for n in range(6):
            assert partition_count(d, n, 0) == 1


def test_out_of_range_weight_is_zero():
    assert partition_count(2, 2, 5) == 0
    assert partition_count(2, 2, -1) == 0


def test_negative_box_rejected():
    with pytest.raises(ValueError):
        partition_count(-1, 2, 0)
    with pytest.raises(ValueError):
        partition_count(2, -1, 0)


def test_against_brute_enumeration():
    for d in range(5):
        for n in range(5):
            for w in range(d * n + 1):
                assert partition_count(d, n, w) == brute_partitions(d, n, w)


def test_box_complement_symmetry():
    for d in range(11):
        for n in range(11):
            for w in range(d * n + 1):
                assert partition_count(d, n, w) == partition_count(d, n, d * n - w)


def test_transpose_symmetry():
    for d in range(11):
        for n in range(11):
            for w in range(d * n + 1):
                assert partition_count(d, n, w) == partition_count(n, d, w)


def test_total_count_is_binomial():
    for d in range(9):
        for n in range(9):
            total = sum(partition_count(d, n, w) for w in range(d * n + 1))
            assert total == comb(d + n, n)


def test_telescoping_collapse():
    # The dimension is the sum of per-order multiplicities
    # N(d,i,w) - N(d,i,w-1) for weights w up to the middle; the sum
    # telescopes to the single middle count, and every summand is a
    # non-negative multiplicity.
    for d in range(1, 7):
        for i in range(8):
            mid = d * i // 2
            deltas = [
                partition_count(d, i, w) - partition_count(d, i, w - 1)
                for w in range(mid + 1)
            ]
            assert all(delta >= 0 for delta in deltas)
            assert sum(deltas) == partition_count(d, i, mid) == dim_covariants(d, i)


def test_quadratic_closed_form():
    for i in range(41):
        assert dim_covariants(2, i) == i // 2 + 1


def test_constants_dimension_one():
    for d in range(1, 10):
        assert dim_covariants(d, 0) == 1


def test_linear_form_all_ones():
    for i in range(30):
        assert dim_covariants(1, i) == 1


def test_cubic_example():
    assert dim_covariants(3, 4) == 5

"""Brute-force dimension oracle via bounded partition counting.

This is the independent route against which the series pipeline is
validated: the dimension of the degree-i graded piece of the covariant
algebra of a binary d-form equals the number of partitions of
floor(d*i/2) that fit in an i by d box.  The per-order
Cayley-Sylvester multiplicities N(d,i,w) - N(d,i,w-1) telescope to that
single count; tests confirm the telescoping on small cases.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["partition_count", "dim_covariants"]


@lru_cache(maxsize=None)
def partition_count(d: int, n: int, w: int) -> int:
    """Number of partitions of w into at most n parts, each part at most d.

    Recurrence: either fewer than n parts are used, N(d, n-1, w), or all n
    parts are positive and removing 1 from each leaves N(d-1, n, w-n).
    Out-of-range weights count 0.
    """
    if d < 0 or n < 0:
        raise ValueError("box dimensions must be non-negative")
    if w < 0 or w > d * n:
        return 0
    if w == 0:
        return 1
    if d == 0 or n == 0:
        return 0
    return partition_count(d, n - 1, w) + partition_count(d - 1, n, w - n)


def dim_covariants(d: int, i: int) -> int:
    """Dimension of the space of degree-i covariants of a binary d-form."""
    if d < 1:
        raise ValueError("form degree must be positive")
    if i < 0:
        raise ValueError("grading degree must be non-negative")
    return partition_count(d, i, (d * i) // 2)

"""Exact integer-partition counting and enumeration.

Counts use the standard two-constraint recurrence (at most L parts,
each at most M) with Python's arbitrary-precision integers, so there
is no overflow cliff.  p(0) = 1 by convention; parts are positive and
"at most L parts" permits fewer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "PartitionQuery",
    "count_partitions",
    "enumerate_partitions",
    "partition_function",
    "conjugate_equivalence_check",
    "claim4_identity",
]


@dataclass(frozen=True)
class PartitionQuery:
    """Partitions of r, optionally bounded in part count and part size."""

    r: int
    max_parts: int | None = None
    max_part: int | None = None

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if self.max_parts is not None and self.max_parts < 0:
            raise ValueError("max_parts must be >= 0")
        if self.max_part is not None and self.max_part < 0:
            raise ValueError("max_part must be >= 0")

    def count(self) -> int:
        return count_partitions(self.r, self.max_parts, self.max_part)

    def enumerate(self) -> list[list[int]]:
        return enumerate_partitions(self.r, self.max_parts, self.max_part)


@lru_cache(maxsize=None)
def _count(r: int, parts: int, largest: int) -> int:
    # partitions of r into at most `parts` parts, each at most `largest`
    if r == 0:
        return 1
    if parts == 0 or largest == 0:
        return 0
    if largest > r:
        largest = r
    total = 0
    # split on whether a part of size exactly `largest` occurs
    if largest <= r:
        total += _count(r - largest, parts - 1, largest)
    total += _count(r, parts, largest - 1)
    return total


def count_partitions(r: int, max_parts: int | None = None, max_part: int | None = None) -> int:
    """Exact number of partitions of r under the given bounds."""
    if r < 0:
        raise ValueError("r must be >= 0")
    parts = r if max_parts is None else min(max_parts, r)
    largest = r if max_part is None else min(max_part, r)
    if r == 0:
        return 1
    return _count(r, parts, largest)


def partition_function(r: int) -> int:
    """p(r), the unrestricted partition count."""
    return count_partitions(r)


def enumerate_partitions(r: int, max_parts: int | None = None, max_part: int | None = None) -> list[list[int]]:
    """All matching partitions as nonincreasing part lists, largest-first order.

    The list starts at [r] (when admissible) and descends
    lexicographically, e.g. r=3 gives [[3], [2, 1], [1, 1, 1]].
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    parts = r if max_parts is None else max_parts
    largest = r if max_part is None else max_part
    out: list[list[int]] = []

    def rec(remaining: int, cap: int, slots: int, acc: list[int]):
        if remaining == 0:
            out.append(acc.copy())
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            acc.append(first)
            rec(remaining - first, first, slots - 1, acc)
            acc.pop()

    rec(r, largest, parts, [])
    return out


def conjugate_equivalence_check(r: int, limit: int) -> bool:
    """True iff #partitions(r, at most `limit` parts) == #partitions(r, parts <= `limit`).

    Conjugation swaps the two constraints, so this holds for all r,
    limit >= 0; the check exercises both counting routes.
    """
    if r < 0 or limit < 0:
        raise ValueError("arguments must be >= 0")
    return count_partitions(r, max_parts=limit) == count_partitions(r, max_part=limit)


def claim4_identity(k: int, big_n: int) -> bool:
    """Check p(N) - p_{N-k}(N) == 1 + p(1) + ... + p(k-1) for N > 2k.

    The left side counts partitions of N whose largest part is at least
    N-k+1; since that largest part exceeds N/2 it is unique, and the
    remainder is an unrestricted partition of at most k-1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if big_n <= 2 * k:
        raise ValueError(f"identity requires N > 2k, got k={k}, N={big_n}")
    left = partition_function(big_n) - count_partitions(big_n, max_parts=big_n - k)
    right = 1 + sum(partition_function(s) for s in range(1, k))
    return left == right

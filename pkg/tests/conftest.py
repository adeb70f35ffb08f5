"""Shared generators for randomized tests (all seeded by the caller)."""

from __future__ import annotations

from itertools import combinations_with_replacement

from toughseq.conditions import ChvatalCondition
from toughseq.sequences import DegreeSequence, is_graphical


def all_valid_sequences(n):
    """Every nondecreasing n-sequence with entries in [0, n-1]."""
    for entries in combinations_with_replacement(range(n), n):
        yield DegreeSequence(entries)


def random_valid_sequence(rng, n) -> DegreeSequence:
    return DegreeSequence(rng.randrange(n) for _ in range(n))


def random_graphical_sequence(rng, n) -> DegreeSequence:
    while True:
        entries = [rng.randrange(n) for _ in range(n)]
        if sum(entries) % 2 == 1:
            i = rng.randrange(n)
            entries[i] += 1 if entries[i] < n - 1 else -1
        seq = DegreeSequence(entries)
        if is_graphical(seq):
            return seq


def random_majorizing_pair(rng, n):
    """A graphical pair (pi, pi2) with pi2 >= pi entry-wise.

    Raising entries of a multiset never lowers any position of the
    sorted sequence, so sorting after the bumps preserves dominance.
    """
    lo = random_graphical_sequence(rng, n)
    for _ in range(50):
        bumped = list(lo)
        for i in range(n):
            if rng.random() < 0.4:
                bumped[i] += rng.randint(0, n - 1 - bumped[i])
        if sum(bumped) % 2 == 1:
            i = max(range(n), key=lambda j: bumped[j] < n - 1)
            if bumped[i] < n - 1:
                bumped[i] += 1
            else:
                continue
        hi = DegreeSequence(bumped)
        if all(a >= b for a, b in zip(hi, lo)) and is_graphical(hi):
            return lo, hi
    return lo, lo


def random_condition(rng, n) -> ChvatalCondition:
    r = rng.randint(0, min(n, 4))
    indices = sorted(rng.sample(range(1, n + 1), r))
    thresholds = sorted(rng.randint(1, n) for _ in range(r))
    return ChvatalCondition(n, tuple(zip(indices, thresholds)))

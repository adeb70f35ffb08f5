"""Sink enumeration for the 1/k-tough subposet and best monotone generation.

The connected graphs on n vertices that are edge-maximally not
1/k-tough all have the shape K_j + (K_{c_1} u ... u K_{c_{kj+1}})
with j(k+1) < n and the c's a partition of n-j into exactly kj+1
positive parts.  Their degree sequences, grouped by the number j of
complete degrees (entries equal to n-1), form the family enumerated
here.  Sinks are the majorization-maximal sequences; one Chvatal-type
condition per sink yields a best monotone theorem, and the number of
sinks lower-bounds the size of any such theorem.

Disconnected edge-maximal graphs fall outside the family (their
sequences contain no complete degree); ``sweep_sinks`` recovers them
at small n by exhaustive graph enumeration so the two routes can be
compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .conditions import ChvatalCondition, blocking_condition, frontier_sequence
from .graphs import Graph, clique, edge_pairs, join, tough_mask_table, union
from .partitions import count_partitions, enumerate_partitions, partition_function
from .sequences import DegreeSequence, majorizes

__all__ = [
    "FamilyMember",
    "GroupStat",
    "SinkReport",
    "enumerate_family",
    "compute_sinks",
    "subposet_report",
    "generate_best_monotone",
    "is_weakly_optimal",
    "edge_maximal_tough_sequences",
    "sweep_sinks",
]


@dataclass(frozen=True)
class FamilyMember:
    """One connected edge-maximal non-(1/k)-tough graph, by shape.

    ``parts`` holds the clique sizes c_1 <= ... <= c_{kj+1} summing to
    n-j; the degree sequence is (c_s + j - 1) repeated c_s times per
    clique plus n-1 repeated j times.
    """

    k: int
    n: int
    j: int
    parts: tuple[int, ...]
    degree_sequence: DegreeSequence

    def realize(self) -> Graph:
        """Build K_j + (K_{c_1} u ... u K_{c_{kj+1}}); small n only."""
        inner = reduce(union, (clique(c) for c in self.parts))
        return join(clique(self.j), inner)


@dataclass(frozen=True)
class GroupStat:
    j: int
    count: int
    expected_count: int
    reduced_total: int  # n - j(k+1) - 1; its partitions into <= kj+1 parts index the group


@dataclass(frozen=True)
class SinkReport:
    """Enumerated family, its sinks, group statistics, and the sink bound."""

    k: int
    n: int
    m: int | None
    family_size: int
    groups: tuple[GroupStat, ...]
    sinks: tuple[DegreeSequence, ...]
    sink_count: int
    bound: Fraction
    claim2: bool | None
    claim3: bool | None

    @property
    def bound_applies(self) -> bool:
        return self.k >= 2 and self.m is not None and self.m >= 9

    @property
    def bound_holds(self) -> bool | None:
        if not self.bound_applies:
            return None
        return self.sink_count >= self.bound

    @property
    def counts_match(self) -> bool:
        return all(g.count == g.expected_count for g in self.groups)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "family_size": self.family_size,
            "groups": [
                {"j": g.j, "count": g.count, "expected_count": g.expected_count,
                 "reduced_total": g.reduced_total}
                for g in self.groups
            ],
            "sinks": [list(s) for s in self.sinks],
            "sink_count": self.sink_count,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "bound_applies": self.bound_applies,
            "bound_holds": self.bound_holds,
            "claims": {"claim2": self.claim2, "claim3": self.claim3},
        }


def enumerate_family(k: int, n: int) -> list[FamilyMember]:
    """All family members for (k, n), j ascending then parts lexicographic.

    For each j with j(k+1) < n, the partitions of n-j into exactly
    kj+1 positive parts (equivalently, of n - j(k+1) - 1 into at most
    kj+1 parts, adding one to every slot).  Too-small parameters give
    an empty list, not an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    members = []
    j = 1
    while j * (k + 1) < n:
        slots = k * j + 1
        reduced = n - j * (k + 1) - 1
        for lam in enumerate_partitions(reduced, max_parts=slots):
            parts = tuple([1] * (slots - len(lam)) + [x + 1 for x in reversed(lam)])
            entries = []
            for c in parts:
                entries.extend([c + j - 1] * c)
            entries.extend([n - 1] * j)
            members.append(FamilyMember(k, n, j, parts, DegreeSequence(entries)))
        j += 1
    members.sort(key=lambda fm: (fm.j, fm.parts))
    return members


def _dominates(a, b) -> bool:
    for x, y in zip(a, b):
        if x < y:
            return False
    return True


def compute_sinks(seqs) -> list:
    """Majorization-maximal elements, deduplicated, lexicographically sorted.

    Processes candidates by decreasing entry sum: a strict majorizer
    has a strictly larger sum, and transitivity lets each candidate be
    tested against the maximal elements found so far only.  Inputs are
    sorted nondecreasing; maximal elements come back as DegreeSequence
    when the degree bounds hold, as plain tuples otherwise (the poset
    machinery is generic over integer sequences).
    """
    uniq = {tuple(sorted(s)) for s in seqs}
    if not uniq:
        return []
    lengths = {len(s) for s in uniq}
    if len(lengths) > 1:
        raise ValueError(f"mixed sequence lengths: {sorted(lengths)}")
    sinks: list[tuple[int, tuple]] = []
    for seq in sorted(uniq, key=lambda s: (-sum(s), s)):
        total = sum(seq)
        if not any(s_total > total and _dominates(s, seq) for s_total, s in sinks):
            sinks.append((total, seq))
    out = []
    for seq in sorted(seq for _, seq in sinks):
        try:
            out.append(DegreeSequence(seq))
        except ValueError:
            out.append(seq)
    return out


def _claim2_no_internal_majorization(group_seqs) -> bool:
    """No sequence in the group majorizes another (strict sum gap required)."""
    by_sum: dict[int, list] = {}
    for s in group_seqs:
        by_sum.setdefault(sum(s), []).append(s)
    sums = sorted(by_sum, reverse=True)
    for hi_idx, hi in enumerate(sums):
        highs = by_sum[hi]
        for lo in sums[hi_idx + 1:]:
            for b in by_sum[lo]:
                for a in highs:
                    if _dominates(a, b):
                        return False
    return True


def subposet_report(k: int, m: int | None = None, n: int | None = None,
                    verify_claims: bool = True) -> SinkReport:
    """Enumerate the (k, n) family and report groups, sinks, and the bound.

    Exactly one of m, n must be given; m means n = m(k+1).  The bound
    p(k-1) * n / (5(k+1)) is always computed but only asserted to hold
    (``bound_holds``) under its hypotheses k >= 2, n = m(k+1), m >= 9.
    Claim verification (no majorization within a group; every sequence
    whose largest noncomplete degree reaches n - k(j+1) is a sink) is
    quadratic in group size and can be switched off for bulk counts.
    """
    if (m is None) == (n is None):
        raise ValueError("give exactly one of m, n")
    if m is not None:
        if m < 1:
            raise ValueError("m must be >= 1")
        n = m * (k + 1)
    else:
        assert n is not None
        m = n // (k + 1) if n % (k + 1) == 0 else None

    members = enumerate_family(k, n)
    by_group: dict[int, list[FamilyMember]] = {}
    for fm in members:
        by_group.setdefault(fm.j, []).append(fm)

    groups = []
    for j in sorted(by_group):
        reduced = n - j * (k + 1) - 1
        expected = count_partitions(reduced, max_parts=k * j + 1)
        groups.append(GroupStat(j, len(by_group[j]), expected, reduced))

    all_seqs = [fm.degree_sequence for fm in members]
    sinks = compute_sinks(all_seqs)

    claim2: bool | None = None
    claim3: bool | None = None
    if verify_claims:
        claim2 = all(
            _claim2_no_internal_majorization([fm.degree_sequence for fm in by_group[j]])
            for j in by_group
        )
        sink_set = set(sinks)
        claim3 = all(
            fm.degree_sequence in sink_set
            for fm in members
            if fm.parts[-1] + fm.j - 1 >= n - k * (fm.j + 1)
        )

    bound = Fraction(partition_function(k - 1) * n, 5 * (k + 1))
    return SinkReport(
        k=k, n=n, m=m,
        family_size=len(members),
        groups=tuple(groups),
        sinks=tuple(sinks),
        sink_count=len(sinks),
        bound=bound,
        claim2=claim2,
        claim3=claim3,
    )


def generate_best_monotone(sinks) -> list[ChvatalCondition]:
    """One blocking condition per sink, canonical and deduplicated.

    A sequence satisfies every emitted condition exactly when no sink
    majorizes it, so the collection declares precisely the sequences
    outside the subposet's shadow.
    """
    out: list[ChvatalCondition] = []
    seen = set()
    for sink in sorted({DegreeSequence(s) for s in sinks}):
        cond = blocking_condition(sink)
        if cond not in seen:
            seen.add(cond)
            out.append(cond)
    return out


def is_weakly_optimal(cond: ChvatalCondition, sinks) -> bool:
    """True iff the frontier sequence of cond is majorized by some sink.

    With the complete sink set for (n, P) this is exactly
    P-weak-optimality: every violator of cond sits below the frontier,
    so all violators are majorized by a non-forcibly-P sequence iff
    the frontier itself is.
    """
    frontier = frontier_sequence(cond)
    return any(majorizes(sink, frontier) for sink in sinks)


@lru_cache(maxsize=None)
def _edge_maximal_cached(n: int, p: int, q: int) -> tuple[DegreeSequence, ...]:
    table = tough_mask_table(n, p, q)
    full = (1 << len(edge_pairs(n))) - 1
    seqs = set()
    for mask in range(full + 1):
        if table[mask]:
            continue
        missing = full ^ mask
        mm = missing
        maximal = True
        while mm:
            b = mm & -mm
            mm ^= b
            if not table[mask | b]:
                maximal = False
                break
        if maximal:
            seqs.add(Graph.from_mask(n, mask).degree_sequence())
    return tuple(sorted(seqs))


def edge_maximal_tough_sequences(n: int, t) -> tuple[DegreeSequence, ...]:
    """Degree sequences of all edge-maximal non-t-tough graphs on n vertices.

    Exhaustive over labeled graphs (small n only): a graph qualifies if
    it is not t-tough but every single-edge supergraph is (the complete
    graph qualifies vacuously when t > n-1).
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return _edge_maximal_cached(n, t.numerator, t.denominator)


def sweep_sinks(n: int, t):
    """Sinks of the full t-tough subposet by exhaustive graph sweep.

    Returns (all sinks, those containing a complete degree).  The
    second component is the part comparable with the connected-family
    enumeration; the first may additionally contain sequences realized
    only by disconnected edge-maximal graphs.
    """
    seqs = edge_maximal_tough_sequences(n, t)
    sinks = tuple(compute_sinks(seqs))
    with_complete = tuple(s for s in sinks if s[-1] == len(s) - 1)
    return sinks, with_complete

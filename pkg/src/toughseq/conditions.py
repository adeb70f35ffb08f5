"""Chvatal-type degree conditions and the blocking/frontier duality.

A condition on n-sequences is a disjunction of clauses ``d_i >= k``
with strictly increasing indices and nondecreasing thresholds.  Two
maps tie conditions to sequences:

* ``blocking_condition(pi)`` is the weakest condition violated by pi;
  a sequence violates it exactly when pi majorizes that sequence.
* ``frontier_sequence(c)`` is the entry-wise maximal n-sequence that
  violates c; it majorizes every violator of c and need not be
  graphical.

The two maps are mutually inverse: frontier(blocking(pi)) == pi, and
blocking(frontier(c)) is equivalent to c.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .sequences import DegreeSequence

__all__ = [
    "ChvatalCondition",
    "evaluate",
    "canonicalize",
    "equivalent",
    "blocking_condition",
    "frontier_sequence",
    "parse_condition",
    "format_condition",
]

_CLAUSE_RE = re.compile(r"^d(\d+)\s*>=\s*(\d+)$")


@dataclass(frozen=True)
class ChvatalCondition:
    """Disjunction of clauses d_{i_j} >= k_{i_j} over n-sequences.

    Invariants: 1 <= i_1 < ... < i_r <= n and 1 <= k_1 <= ... <= k_r <= n.
    The empty disjunction (no clauses) is the always-false condition.
    """

    n: int
    clauses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("condition length n must be >= 1")
        clauses = tuple((int(i), int(k)) for i, k in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        prev_i, prev_k = 0, 1
        for i, k in clauses:
            if not 1 <= i <= self.n:
                raise ValueError(f"clause index {i} out of range 1..{self.n}")
            if not 1 <= k <= self.n:
                raise ValueError(f"clause threshold {k} out of range 1..{self.n}")
            if i <= prev_i:
                raise ValueError("clause indices must strictly increase")
            if k < prev_k:
                raise ValueError("clause thresholds must be nondecreasing")
            prev_i, prev_k = i, k

    def __str__(self) -> str:
        return format_condition(self)


def evaluate(cond: ChvatalCondition, seq) -> bool:
    """True iff some clause d_i >= k holds for seq; empty condition is false."""
    if cond.n != len(seq):
        raise ValueError(f"length mismatch: condition n={cond.n}, sequence n={len(seq)}")
    return any(seq[i - 1] >= k for i, k in cond.clauses)


def canonicalize(cond: ChvatalCondition) -> ChvatalCondition:
    """Unique minimal equivalent condition.

    Clauses with threshold >= n are unsatisfiable (no entry reaches n)
    and are dropped.  Among clauses sharing a threshold only the one
    with the largest index survives: on nondecreasing sequences
    d_i >= k implies d_{i'} >= k for i' >= i, so the larger index gives
    the weaker clause, which subsumes the others.  The survivors have
    strictly increasing thresholds, hence no clause implies another.
    """
    best_index: dict[int, int] = {}
    for i, k in cond.clauses:
        if k >= cond.n:
            continue
        if k not in best_index or i > best_index[k]:
            best_index[k] = i
    kept = sorted((i, k) for k, i in best_index.items())
    return ChvatalCondition(cond.n, tuple(kept))


def equivalent(c1: ChvatalCondition, c2: ChvatalCondition) -> bool:
    """True iff the two conditions agree on every n-sequence."""
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    return canonicalize(c1) == canonicalize(c2)


def blocking_condition(seq) -> ChvatalCondition:
    """C(pi): the weakest condition blocking pi, in canonical form.

    Built as the disjunction d_1 >= k_1+1 | ... | d_n >= k_n+1 for
    pi = (k_1, ..., k_n); a sequence violates the result exactly when
    it is majorized by pi.
    """
    n = len(seq)
    raw = tuple((j, seq[j - 1] + 1) for j in range(1, n + 1) if seq[j - 1] + 1 <= n)
    return canonicalize(ChvatalCondition(n, raw))


def frontier_sequence(cond: ChvatalCondition) -> DegreeSequence:
    """Pi(c): the maximal n-sequence violating c (may be non-graphical).

    With canonical clauses (i_1,k_1) < ... < (i_r,k_r) the entries are
    k_1 - 1 up to position i_1, then k_{s+1} - 1 up to i_{s+1}, and
    n - 1 past i_r.  Every violator of c is majorized by the result.
    Construction guarantees thresholds >= 1, so every condition can be
    violated (the all-zero sequence violates everything).
    """
    cond = canonicalize(cond)
    n = cond.n
    entries: list[int] = []
    pos = 0
    for i, k in cond.clauses:
        entries.extend([k - 1] * (i - pos))
        pos = i
    entries.extend([n - 1] * (n - pos))
    return DegreeSequence(entries)


def condition_to_json(cond: ChvatalCondition) -> dict:
    """JSON form: the length n plus the clause list of [i, k] pairs."""
    return {"n": cond.n, "clauses": [list(cl) for cl in cond.clauses]}


def condition_from_json(data: dict) -> ChvatalCondition:
    return ChvatalCondition(int(data["n"]), tuple((int(i), int(k)) for i, k in data["clauses"]))


def parse_condition(text: str, n: int) -> ChvatalCondition:
    """Parse ``d2>=3 | d5>=4`` syntax; the literal ``false`` is the empty condition."""
    text = text.strip()
    if text.lower() == "false" or not text:
        return ChvatalCondition(n, ())
    clauses = []
    for part in text.split("|"):
        m = _CLAUSE_RE.match(part.strip())
        if not m:
            raise ValueError(f"malformed clause {part.strip()!r}")
        clauses.append((int(m.group(1)), int(m.group(2))))
    return ChvatalCondition(n, tuple(sorted(clauses)))


def format_condition(cond: ChvatalCondition) -> str:
    if not cond.clauses:
        return "false"
    return " | ".join(f"d{i}>={k}" for i, k in cond.clauses)

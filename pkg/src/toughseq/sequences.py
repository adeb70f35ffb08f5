"""Degree sequences: abbreviated notation, graphicality, majorization.

A degree sequence here is always stored in nondecreasing order with
entries in [0, n-1].  The abbreviated text notation writes runs with
exponents, e.g. (4,4,4,4,4,5,5,6) as ``4^5 5^2 6``.
"""

from __future__ import annotations

import operator

__all__ = [
    "DegreeSequence",
    "NotGraphicalError",
    "parse_sequence",
    "format_sequence",
    "is_graphical",
    "majorizes",
]


class NotGraphicalError(ValueError):
    """Raised when an operation requires a graphical sequence but got none."""


class DegreeSequence(tuple):
    """Nondecreasing integer n-sequence with 0 <= d_j <= n-1.

    Entries are sorted at construction, so any iterable of integers in
    range is accepted.  Instances are immutable, hashable, and compare
    like plain tuples (entry-wise, lexicographic ordering).
    """

    __slots__ = ()

    def __new__(cls, entries):
        vals = sorted(operator.index(d) for d in entries)
        if not vals:
            raise ValueError("empty degree sequence")
        n = len(vals)
        if vals[0] < 0 or vals[-1] > n - 1:
            raise ValueError(
                f"degree entries must lie in [0, {n - 1}], got {tuple(vals)}"
            )
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def degree(self, i: int) -> int:
        """Return d_i, 1-based."""
        if not 1 <= i <= len(self):
            raise IndexError(f"index {i} out of range 1..{len(self)}")
        return self[i - 1]

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)!r})"


def parse_sequence(text: str) -> DegreeSequence:
    """Parse abbreviated notation ("4^5 5^2 6") or a plain list ("2,2,2").

    Tokens are ``d^m`` (the value d repeated m times, m >= 1) or a bare
    ``d``; commas count as separators.  Order of tokens is irrelevant
    since the result is sorted.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty degree sequence text")
    entries: list[int] = []
    for tok in tokens:
        value_s, caret, mult_s = tok.partition("^")
        try:
            value = int(value_s)
            mult = int(mult_s) if caret else 1
        except ValueError:
            raise ValueError(f"malformed token {tok!r}") from None
        if mult < 1:
            raise ValueError(f"multiplicity must be >= 1 in token {tok!r}")
        entries.extend([value] * mult)
    return DegreeSequence(entries)


def format_sequence(seq) -> str:
    """Abbreviated notation with ``^m`` omitted for runs of length 1."""
    parts = []
    run_value, run_len = seq[0], 0
    for d in seq:
        if d == run_value:
            run_len += 1
        else:
            parts.append((run_value, run_len))
            run_value, run_len = d, 1
    parts.append((run_value, run_len))
    return " ".join(f"{v}^{m}" if m > 1 else f"{v}" for v, m in parts)


def majorizes(a, b) -> bool:
    """True iff a_j >= b_j for every j (both sequences nondecreasing)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x >= y for x, y in zip(a, b))


def is_graphical(seq) -> bool:
    """Erdos-Gallai test: even degree sum plus the n partial-sum inequalities.

    Works on any valid DegreeSequence, including all-zero sequences
    (realized by isolated vertices).
    """
    n = len(seq)
    if sum(seq) % 2 != 0:
        return False
    # Erdos-Gallai expects nonincreasing order.
    d = sorted(seq, reverse=True)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(d[i], k) for i in range(k, n))
        if prefix > k * (k - 1) + tail:
            return False
    return True

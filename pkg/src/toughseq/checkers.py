"""Forcibly-P checkers: hamiltonicity, k-connectivity, and t-toughness.

Each checker evaluates a family of Chvatal-type degree conditions and
returns a Verdict carrying the full tested condition set.  All index
ranges with rational bounds are resolved by exact integer arithmetic
on t = p/q; floating point would silently shift the boundary clauses.

The checkers are sound but not complete: a sequence that fails may
still be forcibly P.  For the t >= 1 toughness checker the failure is
constructive: the verdict carries a majorizing sequence together with
a realization whose toughness is provably below t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conditions import ChvatalCondition, evaluate, format_condition
from .graphs import MAX_VERTICES, Graph, clique, empty_graph, graph_to_json, join, union
from .sequences import DegreeSequence, NotGraphicalError, is_graphical

__all__ = [
    "Verdict",
    "parse_rational",
    "hamiltonian_conditions",
    "kconnected_conditions",
    "tough_ge1_conditions",
    "tough_le1_conditions",
    "check_hamiltonian_chvatal",
    "check_kconnected",
    "check_tough_ge1",
    "check_tough_le1",
]


def parse_rational(text: str) -> Fraction:
    """Parse 'P' or 'P/Q' into an exact nonnegative rational; floats rejected."""
    s = str(text).strip()
    num, slash, den = s.partition("/")
    try:
        value = Fraction(int(num), int(den)) if slash else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational 'P' or 'P/Q': {text!r}") from None
    if value < 0:
        raise ValueError(f"rational must be >= 0: {text!r}")
    return value


@dataclass(frozen=True)
class Verdict:
    """Checker outcome with the evidence that produced it.

    ``failing_index`` is the first index whose condition fails (the
    t <= 1 checker also reports which rule family, "i" or "ii").  When
    a blocking witness exists, ``blocking_sequence`` majorizes the
    input, ``blocking_shape`` = (j, a, b) describes the realization
    K_j + (K~_a u K_b), and ``blocking_graph`` is that graph (omitted
    above the construction size limit).
    """

    declared: bool
    failing_index: int | None = None
    failing_rule: str | None = None
    blocking_sequence: DegreeSequence | None = None
    blocking_shape: tuple[int, int, int] | None = None
    blocking_graph: Graph | None = None
    condition_set: tuple[ChvatalCondition, ...] = ()

    def shape_text(self) -> str | None:
        if self.blocking_shape is None:
            return None
        j, a, b = self.blocking_shape
        return f"K_{j} + (~K_{a} u K_{b})"

    def to_json(self) -> dict:
        spec = None
        if self.blocking_shape is not None:
            j, a, b = self.blocking_shape
            spec = {"join_clique": j, "independent_set": a, "clique": b,
                    "text": self.shape_text()}
            if self.blocking_graph is not None:
                spec["graph"] = graph_to_json(self.blocking_graph)
        return {
            "declared": self.declared,
            "failing_index": self.failing_index,
            "failing_rule": self.failing_rule,
            "blocking_sequence": list(self.blocking_sequence) if self.blocking_sequence else None,
            "blocking_graph_spec": spec,
            "conditions": [
                {"n": c.n, "clauses": [list(cl) for cl in c.clauses], "text": format_condition(c)}
                for c in self.condition_set
            ],
        }


def _require_graphical(seq, allow_nongraphical: bool):
    if not allow_nongraphical and not is_graphical(seq):
        raise NotGraphicalError(f"sequence {tuple(seq)} is not graphical")


def hamiltonian_conditions(n: int) -> list[tuple[int, ChvatalCondition]]:
    """Chvatal's conditions (d_i >= i+1 or d_{n-i} >= n-i) for i < n/2."""
    if n < 3:
        raise ValueError("hamiltonicity conditions need n >= 3")
    return [
        (i, ChvatalCondition(n, ((i, i + 1), (n - i, n - i))))
        for i in range(1, (n - 1) // 2 + 1)
    ]


def check_hamiltonian_chvatal(seq, allow_nongraphical: bool = False) -> Verdict:
    """Chvatal's forcibly-hamiltonian test with constructive failure witness.

    On failure at index i the emitted sequence i^i (n-i-1)^(n-2i) (n-1)^i
    majorizes the input and is realized by K_i + (K~_i u K_{n-2i}),
    which is not hamiltonian.
    """
    n = len(seq)
    if n < 3:
        raise ValueError("hamiltonicity requires n >= 3")
    _require_graphical(seq, allow_nongraphical)
    indexed = hamiltonian_conditions(n)
    conds = tuple(c for _, c in indexed)
    for i, cond in indexed:
        if not evaluate(cond, seq):
            blocking = DegreeSequence([i] * i + [n - i - 1] * (n - 2 * i) + [n - 1] * i)
            graph = None
            if n <= MAX_VERTICES:
                graph = join(clique(i), union(empty_graph(i), clique(n - 2 * i)))
            return Verdict(False, failing_index=i, blocking_sequence=blocking,
                           blocking_shape=(i, i, n - 2 * i), blocking_graph=graph,
                           condition_set=conds)
    return Verdict(True, condition_set=conds)


def kconnected_conditions(n: int, k: int) -> list[tuple[int, ChvatalCondition]]:
    """Bondy-Boesch conditions (d_i >= i+k-1 or d_{n-k+1} >= n-i) for i <= (n-k+1)/2."""
    if n < 2:
        raise ValueError("k-connectivity conditions need n >= 2")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    return [
        (i, ChvatalCondition(n, ((i, i + k - 1), (n - k + 1, n - i))))
        for i in range(1, (n - k + 1) // 2 + 1)
    ]


def check_kconnected(seq, k: int, allow_nongraphical: bool = False) -> Verdict:
    """Bondy-Boesch forcibly-k-connected test."""
    n = len(seq)
    indexed = kconnected_conditions(n, k)
    _require_graphical(seq, allow_nongraphical)
    conds = tuple(c for _, c in indexed)
    for i, cond in indexed:
        if not evaluate(cond, seq):
            return Verdict(False, failing_index=i, condition_set=conds)
    return Verdict(True, condition_set=conds)


def tough_ge1_conditions(t, n: int) -> list[tuple[int, ChvatalCondition]]:
    """Conditions d_{floor(i/t)} >= i+1 or d_{n-i} >= n-floor(i/t), t <= i < tn/(t+1).

    Integer i runs from ceil(t) through the last integer strictly below
    t*n/(t+1); both bounds and floor(i/t) use exact arithmetic on t = p/q.
    At t = 1 this is exactly Chvatal's hamiltonian condition list.
    """
    t = Fraction(t)
    if t < 1:
        raise ValueError(f"this condition family needs t >= 1, got {t}")
    p, q = t.numerator, t.denominator
    ceil_t = -(-p // q)
    if n < ceil_t + 2:
        raise ValueError(f"need n >= ceil(t)+2 = {ceil_t + 2}, got {n}")
    i_lo = ceil_t
    i_hi = (p * n - 1) // (p + q)  # largest i with i(p+q) < pn
    out = []
    for i in range(i_lo, i_hi + 1):
        b = i * q // p  # floor(i/t)
        out.append((i, ChvatalCondition(n, ((b, i + 1), (n - i, n - b)))))
    return out


def check_tough_ge1(seq, t, allow_nongraphical: bool = False) -> Verdict:
    """Best monotone forcibly-t-tough test for t >= 1.

    On failure at index i (with b = floor(i/t)) the emitted sequence
    i^b (n-b-1)^(n-i-b) (n-1)^i majorizes the input and is realized by
    K_i + (K~_b u K_{n-i-b}), whose toughness is below t.
    """
    n = len(seq)
    t = Fraction(t)
    indexed = tough_ge1_conditions(t, n)
    _require_graphical(seq, allow_nongraphical)
    p, q = t.numerator, t.denominator
    conds = tuple(c for _, c in indexed)
    for i, cond in indexed:
        if not evaluate(cond, seq):
            b = i * q // p
            blocking = DegreeSequence([i] * b + [n - b - 1] * (n - i - b) + [n - 1] * i)
            graph = None
            if n <= MAX_VERTICES:
                graph = join(clique(i), union(empty_graph(b), clique(n - i - b)))
            return Verdict(False, failing_index=i, blocking_sequence=blocking,
                           blocking_shape=(i, b, n - i - b), blocking_graph=graph,
                           condition_set=conds)
    return Verdict(True, condition_set=conds)


def tough_le1_conditions(t, n: int) -> list[tuple[str, int, ChvatalCondition]]:
    """Two condition families for forcibly t-tough, 0 < t <= 1, k = floor(1/t).

    Rule "ii" (d_i >= i or d_n >= n-i, for i <= n/2) forces every
    realization connected; rule "i" (d_i >= i-k+2 or d_{n-i+k-1} >= n-i,
    for k <= i < (n+k-1)/2) rules out the sparse clique structures.
    Verdicts depend only on k, so any t in (1/(k+1), 1/k] tests alike.
    """
    t = Fraction(t)
    if not 0 < t <= 1:
        raise ValueError(f"this condition family needs 0 < t <= 1, got {t}")
    k = t.denominator // t.numerator  # floor(1/t)
    if n < k + 2:
        raise ValueError(f"need n >= floor(1/t)+2 = {k + 2}, got {n}")
    out = []
    for i in range(1, n // 2 + 1):
        out.append(("ii", i, ChvatalCondition(n, ((i, i), (n, n - i)))))
    for i in range(k, (n + k - 2) // 2 + 1):  # largest i with 2i < n+k-1
        out.append(("i", i, ChvatalCondition(n, ((i, i - k + 2), (n - i + k - 1, n - i)))))
    return out


def check_tough_le1(seq, t, allow_nongraphical: bool = False) -> Verdict:
    """Simple (monotone, not best monotone) forcibly-t-tough test for t <= 1.

    Rule "ii" is scanned before rule "i": connectivity of every
    realization is what the second family builds on.  No blocking
    witness is emitted; this theorem is not weakly optimal.
    """
    n = len(seq)
    indexed = tough_le1_conditions(t, n)
    _require_graphical(seq, allow_nongraphical)
    conds = tuple(c for _, _, c in indexed)
    for rule, i, cond in indexed:
        if not evaluate(cond, seq):
            return Verdict(False, failing_index=i, failing_rule=rule, condition_set=conds)
    return Verdict(True, condition_set=conds)

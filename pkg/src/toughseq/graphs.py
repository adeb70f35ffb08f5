"""Exact small-graph oracles: construction, toughness, hamiltonicity, sweeps.

Graphs are stored as bitmask adjacency rows (bit v of ``rows[u]`` set
iff u ~ v), which keeps component flooding and exhaustive cutset
enumeration cheap at oracle scale.  All toughness values are exact
``fractions.Fraction``s; nothing here ever touches floating point.

Exhaustive sweeps enumerate every labeled graph on n vertices (all
2^(n(n-1)/2) edge masks).  Edge bit b of a mask encodes the pair
``edge_pairs(n)[b]``, pairs ordered (0,1), (0,2), ..., (1,2), ...;
"lowest adjacency encoding" in tie-breaks refers to this mask value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .sequences import DegreeSequence

__all__ = [
    "Graph",
    "ToughnessResult",
    "MAX_VERTICES",
    "TOUGHNESS_LIMIT",
    "HAMILTONICITY_LIMIT",
    "SWEEP_LIMIT",
    "clique",
    "empty_graph",
    "union",
    "join",
    "components",
    "toughness",
    "is_t_tough",
    "is_hamiltonian",
    "is_k_connected",
    "forcibly_oracle",
    "parse_graph",
    "read_graph",
    "graph_to_json",
    "edge_pairs",
    "iter_labeled_graphs",
    "tough_mask_table",
    "graphical_sequences_by_sweep",
]

MAX_VERTICES = 24          # construction limit: beyond this nothing here is exact-sweep friendly
TOUGHNESS_LIMIT = 20       # exact cutset enumeration, 2^n subsets
HAMILTONICITY_LIMIT = 12   # backtracking cycle search
SWEEP_LIMIT = 7            # labeled-graph sweeps, 2^(n(n-1)/2) masks


class Graph:
    """Simple undirected graph on vertices 0..n-1, bitmask adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise ValueError(f"graph too large: {n} > {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, n: int, rows) -> "Graph":
        """Trusted constructor from prebuilt adjacency rows (no validation)."""
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        return g

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Decode an edge mask under the fixed pair ordering."""
        rows = [0] * n
        for b, (u, v) in enumerate(edge_pairs(n)):
            if mask >> b & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls.from_rows(n, rows)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.rows[u] >> v & 1]

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(r.bit_count() for r in self.rows)

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.rows[v] == full ^ (1 << v) for v in range(self.n))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()!r})"


@dataclass(frozen=True)
class ToughnessResult:
    """Exact toughness with a deterministic witness cutset.

    For non-complete graphs ``value == |X| / omega(G - X)`` for the
    witness X, no cutset does better, and ties favor the smallest then
    lexicographically least X.  Complete graphs get value n-1 and no
    witness.
    """

    value: Fraction
    witness_cutset: tuple[int, ...] | None
    witness_components: int | None


def clique(m: int) -> Graph:
    if m < 1:
        raise ValueError("clique size must be >= 1")
    if m > MAX_VERTICES:
        raise ValueError(f"graph too large: {m} > {MAX_VERTICES}")
    full = (1 << m) - 1
    return Graph.from_rows(m, [full ^ (1 << v) for v in range(m)])


def empty_graph(m: int) -> Graph:
    if m < 1:
        raise ValueError("graph needs at least one vertex")
    if m > MAX_VERTICES:
        raise ValueError(f"graph too large: {m} > {MAX_VERTICES}")
    return Graph.from_rows(m, [0] * m)


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"graph too large: {n} > {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph.from_rows(n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"graph too large: {n} > {MAX_VERTICES}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph.from_rows(n, rows)


def _component_of(rows, start_bit: int, inside: int) -> int:
    """Bitmask of the component containing start_bit within vertex set `inside`."""
    comp = start_bit
    frontier = start_bit
    while frontier:
        grow = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            grow |= rows[b.bit_length() - 1]
        frontier = grow & inside & ~comp
        comp |= frontier
    return comp


def _count_components(rows, inside: int) -> int:
    count = 0
    rest = inside
    while rest:
        count += 1
        rest ^= _component_of(rows, rest & -rest, rest)
    return count


def components(g: Graph) -> int:
    """omega(G): number of connected components."""
    return _count_components(g.rows, (1 << g.n) - 1)


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return tuple(out)


def toughness(g: Graph) -> ToughnessResult:
    """Exact tau(G) by cutset enumeration; tau(K_n) = n - 1 by convention.

    Cutsets X are visited by increasing size, then lexicographically,
    and only a strictly smaller ratio replaces the witness, so the
    reported witness is deterministic.  Once |X|/(n-|X|) cannot beat
    the best ratio, larger sizes are skipped (that quotient lower
    bounds every ratio at that size).
    """
    n = g.n
    if n > TOUGHNESS_LIMIT:
        raise ValueError(f"exact toughness limited to n <= {TOUGHNESS_LIMIT}")
    if g.is_complete():
        return ToughnessResult(Fraction(n - 1), None, None)
    full = (1 << n) - 1
    rows = g.rows
    best: Fraction | None = None
    best_x: tuple[int, ...] = ()
    best_w = 0
    for size in range(n - 1):
        if best is not None and Fraction(size, n - size) >= best:
            break
        for xs in combinations(range(n), size):
            xmask = 0
            for v in xs:
                xmask |= 1 << v
            inside = full ^ xmask
            first = inside & -inside
            comp = _component_of(rows, first, inside)
            if comp == inside:
                continue
            w = 1 + _count_components(rows, inside ^ comp)
            ratio = Fraction(size, w)
            if best is None or ratio < best:
                best = ratio
                best_x = xs
                best_w = w
    assert best is not None  # non-complete graphs always have a cutset
    return ToughnessResult(best, best_x, best_w)


def is_t_tough(g: Graph, t) -> bool:
    """True iff tau(G) >= t; scans cutsets with early exit on a violation."""
    t = Fraction(t)
    n = g.n
    if g.is_complete():
        return n - 1 >= t
    if t <= 0:
        return True
    p, q = t.numerator, t.denominator
    full = (1 << n) - 1
    rows = g.rows
    # S = surviving vertex set, X = full ^ S
    for s in range(1, full + 1):
        first = s & -s
        comp = _component_of(rows, first, s)
        if comp == s:
            continue
        w = 1 + _count_components(rows, s ^ comp)
        x = n - s.bit_count()
        if q * x < p * w:
            return False
    return True


def is_hamiltonian(g: Graph) -> bool:
    """Exact backtracking search for a spanning cycle (needs n >= 3)."""
    n = g.n
    if n > HAMILTONICITY_LIMIT:
        raise ValueError(f"hamiltonicity search limited to n <= {HAMILTONICITY_LIMIT}")
    if n < 3:
        return False
    rows = g.rows
    if any(r.bit_count() < 2 for r in rows):
        return False
    full = (1 << n) - 1
    if _component_of(rows, 1, full) != full:
        return False

    start_row = rows[0]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        m = rows[v] & ~visited
        while m:
            b = m & -m
            m ^= b
            if extend(b.bit_length() - 1, visited | b):
                return True
        return False

    # fix vertex 0 as the cycle anchor
    m = start_row
    while m:
        b = m & -m
        m ^= b
        if extend(b.bit_length() - 1, 1 | b):
            return True
    return False


def is_k_connected(g: Graph, k: int) -> bool:
    """Standard k-connectivity: n > k and no cutset of size < k (K_n is (n-1)-connected)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = g.n
    if k == 0:
        return True
    if n <= k:
        return False
    full = (1 << n) - 1
    rows = g.rows
    for size in range(k):
        for xs in combinations(range(n), size):
            xmask = 0
            for v in xs:
                xmask |= 1 << v
            inside = full ^ xmask
            if _component_of(rows, inside & -inside, inside) != inside:
                return False
    return True


def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Bit-position -> vertex-pair table for edge masks on n vertices."""
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


def iter_labeled_graphs(n: int):
    """Yield (mask, rows, degrees) for every labeled graph on n vertices.

    Masks follow binary-reflected Gray order so each step flips one
    edge and the rows/degrees update in O(1).  The yielded lists are
    shared and mutated in place: consume, don't store.
    """
    if n > SWEEP_LIMIT + 1:  # 2^28 masks at n = 8 is already hours of work
        raise ValueError(f"labeled sweep limited to n <= {SWEEP_LIMIT + 1}")
    pairs = edge_pairs(n)
    m = len(pairs)
    rows = [0] * n
    degs = [0] * n
    yield 0, rows, degs
    gray = 0
    for i in range(1, 1 << m):
        b = (i & -i).bit_length() - 1
        u, v = pairs[b]
        bit = 1 << b
        gray ^= bit
        if gray & bit:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            degs[u] += 1
            degs[v] += 1
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            degs[u] -= 1
            degs[v] -= 1
        yield gray, rows, degs


@lru_cache(maxsize=None)
def _component_count_table(s: int) -> bytes:
    """omega for every labeled graph on s vertices, indexed by edge mask."""
    full = (1 << s) - 1
    out = bytearray(1 << len(edge_pairs(s)))
    for mask, rows, _ in iter_labeled_graphs(s):
        out[mask] = _count_components(rows, full)
    return bytes(out)


@lru_cache(maxsize=None)
def _induced_subset_tables(n: int):
    """Bookkeeping to maintain induced edge masks of every vertex subset.

    Returns (subset_sizes, edge_updates, full_index, scan_order) where
    subsets S with |S| >= 2 are indexed densely; edge_updates[b] lists
    (subset_index, local_bit) for every subset containing global edge
    bit b; scan_order visits proper subsets by decreasing size.
    """
    pairs = edge_pairs(n)
    bit_of_pair = {uv: b for b, uv in enumerate(pairs)}
    subs = [S for S in range(1 << n) if S.bit_count() >= 2]
    index_of = {S: i for i, S in enumerate(subs)}
    sizes = [S.bit_count() for S in subs]
    edge_updates: list[list[tuple[int, int]]] = [[] for _ in pairs]
    for S, idx in index_of.items():
        verts = _mask_to_vertices(S)
        local_bit = {uv: b for b, uv in enumerate(edge_pairs(len(verts)))}
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                gb = bit_of_pair[(verts[a], verts[b])]
                edge_updates[gb].append((idx, 1 << local_bit[(a, b)]))
    full_index = index_of[(1 << n) - 1]
    scan_order = sorted((i for i in range(len(subs)) if i != full_index),
                        key=lambda i: -sizes[i])
    updates = tuple(tuple(u) for u in edge_updates)
    return sizes, updates, full_index, scan_order


@lru_cache(maxsize=None)
def tough_mask_table(n: int, p: int, q: int) -> bytes:
    """Table over all edge masks: entry 1 iff the graph is (p/q)-tough.

    Shared by the acceptance sweeps and the edge-maximal machinery;
    cached per (n, p, q) since a single n=7 fill visits 2^21 graphs.

    Three tricks keep the fill fast without changing results:
    * per-subset induced edge masks are maintained incrementally while
      masks count up (an increment flips ~2 edge bits amortized), so
      omega(G[S]) is a table lookup instead of a flood fill;
    * t-tough survives edge addition, and ascending mask order visits
      all children first, so any already-tough child certifies the
      graph and only minimal tough graphs need the full cutset scan;
    * the empty cutset (connectivity) is tested first, which settles
      every disconnected graph in one lookup.
    """
    if p <= 0 or q <= 0:
        raise ValueError("t must be a positive rational")
    if n > SWEEP_LIMIT:
        raise ValueError(f"toughness tables limited to n <= {SWEEP_LIMIT}")
    pairs = edge_pairs(n)
    m = len(pairs)
    full_edges = (1 << m) - 1
    complete_ok = 1 if q * (n - 1) >= p else 0
    sizes, edge_updates, full_index, scan_order = _induced_subset_tables(n)
    comp = [_component_count_table(s) for s in range(n + 1)]
    sub_tables = [comp[s] for s in sizes]
    cut_weight = [q * (n - s) for s in sizes]  # q * |X| for S the surviving set
    full_table = sub_tables[full_index]
    ind = [0] * len(sizes)
    table = bytearray(1 << m)

    for mask in range(1 << m):
        if mask:
            changed = mask ^ (mask - 1)
            while changed:
                bit = changed & -changed
                changed ^= bit
                for idx, lb in edge_updates[bit.bit_length() - 1]:
                    ind[idx] ^= lb
        if mask == full_edges:
            table[mask] = complete_ok  # tau(K_n) = n - 1 by convention
            continue
        em = mask
        while em:
            bit = em & -em
            em ^= bit
            if table[mask ^ bit]:
                table[mask] = 1  # a tough subgraph certifies the supergraph
                break
        else:
            if full_table[ind[full_index]] >= 2:
                continue  # disconnected: empty cutset violates for any t > 0
            for idx in scan_order:
                w = sub_tables[idx][ind[idx]]
                if w >= 2 and cut_weight[idx] < p * w:
                    break
            else:
                table[mask] = 1
    return bytes(table)


@lru_cache(maxsize=None)
def graphical_sequences_by_sweep(n: int) -> frozenset:
    """Degree multisets realized by at least one labeled graph on n vertices."""
    seen = set()
    for _, _, degs in iter_labeled_graphs(n):
        seen.add(tuple(sorted(degs)))
    return frozenset(seen)


def forcibly_oracle(seq, predicate, limit: int = SWEEP_LIMIT):
    """Test whether every labeled realization of seq satisfies the predicate.

    Returns (True, None) or (False, counterexample); counterexamples
    are deterministic (lowest edge-mask realization that fails).  The
    sweep is exhaustive over labeled graphs, so seq must be small.
    """
    n = len(seq)
    if n > limit:
        raise ValueError(f"forcibly oracle limited to n <= {limit}")
    target = tuple(seq)
    matches = [mask for mask, _, degs in iter_labeled_graphs(n)
               if tuple(sorted(degs)) == target]
    if not matches:
        raise ValueError(f"sequence {target} is not graphical")
    for mask in sorted(matches):
        g = Graph.from_mask(n, mask)
        if not predicate(g):
            return False, g
    return True, None


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format (first line n, then `u v` lines) or the JSON form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return Graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise ValueError(f"expected 'u v', got {ln!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}

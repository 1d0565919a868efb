"""Immutable simple undirected graphs on vertex set {0..n-1}.

Vertices are dense integer labels. Adjacency is kept both as sorted
neighbor tuples and as per-vertex bitmasks, so membership tests and the
flood fills used by the search oracle are O(1)/O(n) on desk-scale graphs.
All constructors document their labeling; ``join`` places its first
argument's vertices first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 input (bad length, bad character, nonzero padding)."""


GRAPH6_HEADER = ">>graph6<<"

_MAX_GRAPH6_N = 62  # single size byte only; larger inputs are rejected


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "edge_count", "_neighbors", "_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        bits = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if bits[u] >> v & 1:
                continue  # ignore a duplicate of an edge already present
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            count += 1
        self._bits = tuple(bits)
        self._neighbors = tuple(
            tuple(v for v in range(n) if bits[u] >> v & 1) for u in range(n)
        )
        self.edge_count = count

    # -- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def neighbor_bits(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        return self._bits[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._bits[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self._neighbors[u] if u < v]

    def min_degree(self) -> int:
        """delta(G); 0 for the empty graph."""
        if self.n == 0:
            return 0
        return min(len(nb) for nb in self._neighbors)

    def is_connected(self) -> bool:
        """BFS connectivity; the 0-vertex graph counts as connected."""
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            v = 0
            rest = frontier
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                nxt |= self._bits[v]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    # -- equality is labeled equality, not isomorphism --------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of G - S and the count of odd-order ones."""

    components: tuple[tuple[int, ...], ...]
    odd_count: int


# -- constructors ---------------------------------------------------------


def empty(k: int) -> Graph:
    """k isolated vertices."""
    return Graph(k)


def complete(k: int) -> Graph:
    """K_k."""
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def cycle(k: int) -> Graph:
    """C_k, vertices in cyclic order 0-1-...-(k-1)-0."""
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """P_k, the path 0-1-...-(k-1)."""
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the a-side gets labels 0..a-1."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 u G2; g2's vertices are relabeled by offset g1.n."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 v G2: disjoint union plus all cross edges; g1's vertices come first."""
    off = g1.n
    edges = g1.edges()
    edges += [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def clique_join(s: int, parts: Sequence[int]) -> Graph:
    """K_s joined to a disjoint union of cliques K_{parts[0]}, K_{parts[1]}, ...

    Labels: the K_s vertices are 0..s-1, then each part's clique in order.
    """
    if s < 0 or any(p < 0 for p in parts):
        raise ValueError("clique sizes must be nonnegative")
    inner = empty(0)
    for p in parts:
        inner = disjoint_union(inner, complete(p))
    return join(complete(s), inner)


# -- vertex deletion and components ---------------------------------------


def delete_vertices(g: Graph, remove: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on V - remove, relabeled consecutively.

    Returns (subgraph, kept) where kept[new_label] = old_label.
    """
    removed = set(remove)
    for v in removed:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    kept = tuple(v for v in range(g.n) if v not in removed)
    index = {old: new for new, old in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    return Graph(len(kept), edges), kept


def components(g: Graph, removed: Iterable[int] = ()) -> ComponentReport:
    """Connected components of G - S and the number of odd-order ones."""
    removed_mask = 0
    for v in removed:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        removed_mask |= 1 << v
    alive = ((1 << g.n) - 1) & ~removed_mask
    comps = []
    odd = 0
    while alive:
        start = alive & -alive
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g._bits[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & alive & ~seen
            seen |= frontier
        members = tuple(v for v in range(g.n) if seen >> v & 1)
        comps.append(members)
        if len(members) % 2 == 1:
            odd += 1
        alive &= ~seen
    return ComponentReport(tuple(comps), odd)


# -- graph6 codec ----------------------------------------------------------
#
# Upper-triangle bits are read column-major: x(0,1), x(0,2), x(1,2),
# x(0,3), x(1,3), x(2,3), ... packed 6 bits per character MSB first,
# each character value = bits + 63, zero-padded to a 6-bit boundary.


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (single size byte, n <= 62)."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("multi-byte graph6 sizes (n > 62) are not supported")
    if not (63 <= first <= 126):
        raise Graph6Error(f"size byte {line[0]!r} out of range 63..126")
    n = first - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[1:]
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} data characters for n={n}, got {len(body)}"
        )
    bits = 0
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6Error(f"data character {ch!r} out of range 63..126")
        bits = bits << 6 | val
    pad = 6 * nchars - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if bits >> pos & 1:
                edges.append((row, col))
            pos -= 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a canonical graph6 line (n <= 62 only)."""
    n = g.n
    if n > _MAX_GRAPH6_N:
        raise Graph6Error(f"graph6 encoding limited to n <= {_MAX_GRAPH6_N}, got {n}")
    bits = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            bits = bits << 1 | (1 if g.has_edge(row, col) else 0)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    chars = [chr(63 + n)]
    for shift in range(nbits - 6, -1, -6):
        chars.append(chr(63 + (bits >> shift & 63)))
    return "".join(chars)


def iter_graph6(lines: Iterable[str]) -> Iterable[Graph]:
    """Decode an iterable of graph6 lines, skipping blanks."""
    for line in lines:
        line = line.strip()
        if not line:
            continue
        yield from_graph6(line)


def load_graph6_file(path) -> list[Graph]:
    """Read a newline-separated graph6 corpus file."""
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6(fh))

"""Ground-truth even-factor decisions by exact search.

An even factor is a spanning subgraph in which every vertex has nonzero
even degree. The search is a depth-first backtrack over edge
include/exclude decisions with parity pruning: a vertex dies as soon as
its decided degree plus its undecided incident edges cannot reach an even
value of at least 2. Vertices of degree < 2 rule out an even factor
immediately. Also provides the odd-component counting condition
o(G - S) < |S| for all |S| >= 2, which is sufficient on even orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .graphs import Graph, components

DEFAULT_NODE_CAP = 100_000_000


class CertificateStatus(Enum):
    FOUND = "found"
    NONE_EXISTS = "none-exists"
    SEARCH_CAP_EXCEEDED = "cap-exceeded"


@dataclass(frozen=True)
class EvenFactorCertificate:
    status: CertificateStatus
    edges: Optional[tuple[tuple[int, int], ...]]
    nodes_explored: int


@dataclass(frozen=True)
class OddComponentReport:
    """Outcome of checking o(G - S) < |S| over all S with |S| >= 2.

    ``witness`` is the first S (smallest size, lexicographic) violating the
    condition, i.e. with o(G - S) >= |S|.
    """

    holds: bool
    witness: Optional[tuple[int, ...]]
    subsets_checked: int


def is_even_factor(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the edge set gives every vertex of g an even degree >= 2."""
    deg = [0] * g.n
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not in graph")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add(key)
        deg[u] += 1
        deg[v] += 1
    return all(d >= 2 and d % 2 == 0 for d in deg)


def find_even_factor(g: Graph, *, node_cap: int = DEFAULT_NODE_CAP) -> EvenFactorCertificate:
    """Exact even-factor search: Found with a certificate, or exhaustion.

    Deterministic: edges are decided in a fixed order (edges touching
    low-degree vertices first), and the branch taken first at each edge
    depends only on the current parity state. Routinely fast up to n ~ 16
    and m ~ 40; beyond that rely on ``node_cap``.
    """
    n = g.n
    if n == 0:
        return EvenFactorCertificate(CertificateStatus.FOUND, (), 0)
    if g.min_degree() < 2:
        return EvenFactorCertificate(CertificateStatus.NONE_EXISTS, None, 0)

    edges = sorted(
        g.edges(),
        key=lambda e: (min(g.degree(e[0]), g.degree(e[1])),
                       max(g.degree(e[0]), g.degree(e[1])), e),
    )
    m = len(edges)
    inc = [0] * n          # decided-included degree
    und = [0] * n          # undecided incident edges
    for u, v in edges:
        und[u] += 1
        und[v] += 1
    chosen = [False] * m

    def dead(w: int) -> bool:
        k, u = inc[w], und[w]
        if k + u < 2:
            return True
        return u == 0 and (k < 2 or k % 2 == 1)

    def apply(idx: int, take: bool) -> bool:
        u, v = edges[idx]
        und[u] -= 1
        und[v] -= 1
        if take:
            inc[u] += 1
            inc[v] += 1
        chosen[idx] = take
        return not (dead(u) or dead(v))

    def undo(idx: int) -> None:
        u, v = edges[idx]
        und[u] += 1
        und[v] += 1
        if chosen[idx]:
            inc[u] -= 1
            inc[v] -= 1

    nodes = 0
    # stack holds (edge index, branch order, next branch position)
    stack: list[tuple[int, tuple[bool, bool], int]] = []
    pos = 0
    while True:
        if pos == m:
            if all(k >= 2 and k % 2 == 0 for k in inc):
                found = tuple(e for i, e in enumerate(edges) if chosen[i])
                return EvenFactorCertificate(CertificateStatus.FOUND, found, nodes)
            ok = False
        else:
            u, v = edges[pos]
            prefer_take = inc[u] < 2 or inc[v] < 2
            order = (True, False) if prefer_take else (False, True)
            if nodes >= node_cap:
                return EvenFactorCertificate(
                    CertificateStatus.SEARCH_CAP_EXCEEDED, None, nodes
                )
            nodes += 1
            ok = apply(pos, order[0])
            stack.append((pos, order, 1))
            pos += 1
        while not ok:
            if not stack:
                return EvenFactorCertificate(CertificateStatus.NONE_EXISTS, None, nodes)
            idx, order, nxt = stack.pop()
            undo(idx)
            pos = idx
            if nxt < 2:
                if nodes >= node_cap:
                    return EvenFactorCertificate(
                        CertificateStatus.SEARCH_CAP_EXCEEDED, None, nodes
                    )
                nodes += 1
                ok = apply(idx, order[nxt])
                stack.append((idx, order, nxt + 1))
                pos = idx + 1


def odd_component_condition(g: Graph) -> OddComponentReport:
    """Check o(G - S) < |S| for every S with |S| >= 2, witness on failure.

    Only sizes up to n/2 are enumerated: o(G - S) >= |S| needs at least |S|
    vertices outside S. Enumeration is in increasing size, lexicographic, so
    the reported witness is deterministic. Exponential in n; intended for
    n up to ~24.
    """
    n = g.n
    checked = 0
    for size in range(2, n // 2 + 1):
        for subset in combinations(range(n), size):
            checked += 1
            if components(g, subset).odd_count >= size:
                return OddComponentReport(False, subset, checked)
    return OddComponentReport(True, None, checked)

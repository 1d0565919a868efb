"""Dense symmetric matrices of a graph and their Perron roots.

Provides the signless Laplacian Q(G) = A(G) + D(G), the distance matrix,
the Wiener index, and a deterministic shifted power iteration that returns
the largest eigenvalue together with its eigenvector and residual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph


class DisconnectedGraphError(ValueError):
    """Distance-based invariants need a connected graph."""


class NonConvergenceError(RuntimeError):
    """Power iteration hit the iteration cap before meeting tolerances."""

    def __init__(self, iterations: int, residual: float):
        super().__init__(
            f"no convergence after {iterations} iterations (residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


# Convergence policy: Rayleigh estimates must settle to VALUE_TOL (scaled)
# and the eigen residual must drop below RESIDUAL_TOL * (1 + ||M||_inf).
VALUE_TOL = 1e-12
RESIDUAL_TOL = 1e-10
MAX_ITERATIONS = 200_000


@dataclass(frozen=True)
class PerronResult:
    """Largest eigenvalue with unit eigenvector, iteration count, residual."""

    value: float
    vector: np.ndarray
    iterations: int
    residual: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in g.neighbors(u):
            a[u, v] = 1.0
    return a


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G): degrees on the diagonal, adjacency off it."""
    q = adjacency_matrix(g)
    for v in range(g.n):
        q[v, v] = g.degree(v)
    return q


def _bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    level = 0
    while frontier:
        level += 1
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= g.neighbor_bits(low.bit_length() - 1)
            rest ^= low
        frontier = nxt & ~seen
        seen |= frontier
        rest = frontier
        while rest:
            low = rest & -rest
            dist[low.bit_length() - 1] = level
            rest ^= low
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances; raises DisconnectedGraphError."""
    if g.n == 0:
        raise ValueError("distance matrix undefined for the 0-vertex graph")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")
    d = np.zeros((g.n, g.n))
    for src in range(g.n):
        row = _bfs_distances(g, src)
        d[src, :] = row
    return d


def wiener_index(g: Graph) -> int:
    """W(G) = sum of pairwise distances of a connected graph."""
    if g.n == 0:
        raise ValueError("Wiener index undefined for the 0-vertex graph")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")
    total = 0
    for src in range(g.n):
        total += sum(_bfs_distances(g, src))
    return total // 2


def largest_eigenvalue(
    m: np.ndarray,
    *,
    value_tol: float = VALUE_TOL,
    residual_tol: float = RESIDUAL_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> PerronResult:
    """Largest eigenvalue of a real symmetric matrix by shifted power iteration.

    The iteration runs on M + (1 + ||M||_inf) I, which is positive definite,
    so the dominant eigenvalue of the shifted matrix is the largest eigenvalue
    of M plus the shift. The all-ones start vector is never orthogonal to the
    Perron vector of a nonnegative matrix, and for nonnegative irreducible M
    the returned vector is strictly positive.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        raise ValueError("matrix must have order >= 1")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be symmetric")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")

    norm_inf = float(np.max(np.sum(np.abs(m), axis=1))) if n else 0.0
    shift = 1.0 + norm_inf
    residual_bound = residual_tol * (1.0 + norm_inf)

    x = np.full(n, 1.0 / np.sqrt(n))
    prev = None
    for it in range(1, max_iterations + 1):
        mx = m @ x
        value = float(x @ mx)
        residual = float(np.max(np.abs(mx - value * x)))
        if (
            prev is not None
            and abs(value - prev) <= value_tol * (1.0 + abs(value))
            and residual <= residual_bound
        ):
            return PerronResult(value, x, it, residual)
        prev = value
        y = mx + shift * x
        x = y / np.linalg.norm(y)
    mx = m @ x
    value = float(x @ mx)
    residual = float(np.max(np.abs(mx - value * x)))
    raise NonConvergenceError(max_iterations, residual)


def rho_q(g: Graph) -> float:
    """Signless Laplacian spectral radius."""
    if g.n == 0:
        raise ValueError("spectral radius undefined for the 0-vertex graph")
    return largest_eigenvalue(signless_laplacian(g)).value


def rho_d(g: Graph) -> float:
    """Distance spectral radius of a connected graph."""
    return largest_eigenvalue(distance_matrix(g)).value

"""Seeded random graph sampling for verification sweeps.

Edge-probability model: each sample draws p uniformly from a configured
range, then includes each vertex pair independently with probability p.
Samples failing the connectivity or minimum-degree requirement are
rejected and redrawn, so runs are deterministic for a fixed seed.
"""

from __future__ import annotations

from random import Random

from .graphs import Graph

DEFAULT_P_RANGE = (0.25, 0.75)


def sample_graph(rng: Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def sample_connected_graph(
    rng: Random,
    n: int,
    *,
    p_range: tuple[float, float] = DEFAULT_P_RANGE,
    min_degree: int = 2,
    max_tries: int = 100_000,
) -> Graph:
    """Rejection-sample a connected graph with the required minimum degree."""
    for _ in range(max_tries):
        p = rng.uniform(*p_range)
        g = sample_graph(rng, n, p)
        if g.is_connected() and g.min_degree() >= min_degree:
            return g
    raise RuntimeError(
        f"no admissible sample in {max_tries} tries (n={n}, p_range={p_range})"
    )

"""Access to the bundled corpora of connected graphs (one per iso class)."""

from __future__ import annotations

from importlib import resources

from .graphs import Graph, iter_graph6

BUNDLED_ORDERS = range(1, 9)

# connected graphs up to isomorphism, by order (standard enumeration)
BUNDLED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def bundled_corpus_text(n: int) -> str:
    if n not in BUNDLED_ORDERS:
        raise ValueError(f"no bundled corpus for n={n} (have n in 1..8)")
    return (
        resources.files("evenfactor.data")
        .joinpath(f"connected_{n}.g6")
        .read_text(encoding="ascii")
    )


def load_bundled_corpus(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one representative per class."""
    graphs = list(iter_graph6(bundled_corpus_text(n).splitlines()))
    if len(graphs) != BUNDLED_COUNTS[n]:
        raise RuntimeError(
            f"bundled corpus for n={n} has {len(graphs)} graphs, "
            f"expected {BUNDLED_COUNTS[n]}"
        )
    return graphs

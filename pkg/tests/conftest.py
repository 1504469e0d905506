"""Shared corpus generators for the seeded randomized checks."""

from __future__ import annotations

import itertools
from random import Random

from sgcirc import NEG, POS, SignedGraph, build_graph


def random_signed_graph(rng: Random, n_min: int = 3, n_max: int = 12,
                        max_edges_factor: float = 2.0) -> SignedGraph:
    """Random simple signed graph, sparse enough for cycle enumeration."""
    n = rng.randint(n_min, n_max)
    pairs = list(itertools.combinations(range(n), 2))
    cap = min(len(pairs), max(n - 1, int(max_edges_factor * n)))
    m = rng.randint(min(n - 1, cap), cap)
    chosen = rng.sample(pairs, m)
    edges = [(u, v, NEG if rng.random() < 0.5 else POS) for u, v in chosen]
    return build_graph(n, edges)


def dense_signed_graph(rng: Random, n_min: int = 3, n_max: int = 7) -> SignedGraph:
    """Random signed graph of any density (small n only)."""
    n = rng.randint(n_min, n_max)
    pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(n - 1, len(pairs))
    chosen = rng.sample(pairs, m)
    edges = [(u, v, NEG if rng.random() < 0.5 else POS) for u, v in chosen]
    return build_graph(n, edges)

"""Seeded random graph models.

Every generator takes an explicit ``seed``; identical arguments give an
identical graph.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .graph import Graph


def disjoint_cliques(k: int, s: int) -> Graph:
    """``k`` disjoint copies of ``K_s``: independence number ``k`` (for ``s >= 1``)
    and no clique immersion larger than ``s``."""
    if k < 1 or s < 1:
        raise ValueError("disjoint-cliques needs k >= 1 and s >= 1")
    edges = [(c * s + u, c * s + v) for c in range(k) for u, v in combinations(range(s), 2)]
    return Graph.from_edges(k * s, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ValueError("gnp needs n >= 1 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    coin = rng.random((n, n)) < p
    iu, ju = np.triu_indices(n, k=1)
    keep = coin[iu, ju]
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def triangle_free(n: int, seed: int) -> Graph:
    """Random maximal triangle-free graph: scan the pairs in random order and
    keep an edge whenever it closes no triangle."""
    if n < 1:
        raise ValueError("triangle-free needs n >= 1")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    order = rng.permutation(len(pairs))
    adj = [0] * n
    edges = []
    for idx in order.tolist():
        u, v = pairs[idx]
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def complement_triangle_free(n: int, seed: int) -> Graph:
    """Complement of a random maximal triangle-free graph; its independence
    number is exactly 2 for ``n >= 2``."""
    return triangle_free(n, seed).complement()


def noisy_cliques(k: int, n: int, p: float, seed: int) -> Graph:
    """``n`` vertices split into ``k`` near-equal cliques, plus each cross pair
    independently with probability ``p``. Independence number is at most ``k``."""
    if k < 1 or n < k or not 0.0 <= p <= 1.0:
        raise ValueError("noisy-cliques needs 1 <= k <= n and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    part = np.arange(n) % k
    rng.shuffle(part)
    coin = rng.random((n, n)) < p
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if part[u] == part[v] or coin[u, v]]
    return Graph.from_edges(n, edges)


MODELS = {
    "disjoint-cliques": disjoint_cliques,
    "gnp": gnp,
    "complement-trianglefree": complement_triangle_free,
    "noisy-cliques": noisy_cliques,
}

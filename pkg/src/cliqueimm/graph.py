"""Simple undirected graphs on dense integer vertex ids, exact independence
machinery, and the neighbourhood-trace partition used by the extractor.

Adjacency is stored as one Python ``int`` bitmask per vertex; all set-valued
helpers in this module work on those bitmasks internally and hand back sorted
tuples to callers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``parent`` optionally records, for an induced subgraph, the id of each
    vertex in the graph it was cut out of.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(repr=False, compare=False)
    parent: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   parent: Sequence[int] | None = None) -> "Graph":
        if n < 0:
            raise ValueError("negative vertex count")
        adj = [0] * n
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in norm:
                raise ValueError(f"duplicate edge ({a}, {b})")
            norm.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        if parent is not None:
            parent = tuple(parent)
            if len(parent) != n:
                raise ValueError("parent mapping has wrong length")
        return cls(n, frozenset(norm), tuple(adj), parent)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all(not (self.adj[v] & m) for v in vs)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices`` relabelled to ``0..k-1`` in
        ascending order; ``parent`` maps new ids back to ids of ``self``."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        sub_edges = [(index[u], index[v]) for (u, v) in self.edges
                     if u in index and v in index]
        return Graph.from_edges(len(vs), sub_edges, parent=vs)

    def complement(self) -> "Graph":
        full = self.full_mask
        edges = [(u, v) for u in range(self.n)
                 for v in bits(full & ~self.adj[u] & ~((1 << (u + 1)) - 1))]
        return Graph.from_edges(self.n, edges)

    def connected_from(self, start_mask: int, allowed: int) -> int:
        """Vertices reachable from ``start_mask & allowed`` inside ``allowed``."""
        seen = start_mask & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen


# -- exact independence -----------------------------------------------------

def _clique_cover_bound(g: Graph, cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``; an upper bound
    on the independence number of ``g[cand]``."""
    count = 0
    while cand:
        count += 1
        v = (cand & -cand).bit_length() - 1
        clique_cand = cand & g.adj[v]
        cand &= ~(1 << v)
        while clique_cand:
            w = (clique_cand & -clique_cand).bit_length() - 1
            cand &= ~(1 << w)
            clique_cand &= g.adj[w]
    return count


def _mis_mask(g: Graph, cand: int, node_limit: int | None = None) -> tuple[int, bool]:
    """Branch and bound for a lexicographically smallest maximum independent
    set inside ``cand``. Returns (mask, exact)."""
    best = [0, 0]  # mask, size
    nodes = [0]
    exact = [True]

    def rec(chosen: int, size: int, cand: int) -> None:
        if node_limit is not None:
            nodes[0] += 1
            if nodes[0] > node_limit:
                exact[0] = False
                return
        if not cand:
            if size > best[1]:
                best[0], best[1] = chosen, size
            return
        if size + cand.bit_count() <= best[1]:
            return
        if size + _clique_cover_bound(g, cand) <= best[1]:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        # include-first keeps the enumeration in lexicographic order, so the
        # first maximum found is the lexicographically smallest
        rec(chosen | 1 << v, size + 1, rest & ~g.adj[v])
        if not exact[0]:
            return
        rec(chosen, size, rest)

    rec(0, 0, cand)
    return best[0], exact[0]


def max_independent_set(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest maximum independent set of ``g``."""
    if g.n == 0:
        raise ValueError("empty input")
    mask, _ = _mis_mask(g, g.full_mask)
    return tuple(bits(mask))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


def max_clique(g: Graph, node_limit: int | None = None) -> tuple[tuple[int, ...], bool]:
    """Maximum clique via independence in the complement.

    With ``node_limit`` the search may stop early; the second item tells
    whether the returned clique is certified maximum.
    """
    if g.n == 0:
        raise ValueError("empty input")
    mask, exact = _mis_mask(g.complement(), g.full_mask, node_limit)
    if not mask:
        mask = 1
    return tuple(bits(mask)), exact


# -- non-neighbourhoods and traces ----------------------------------------

def _check_index_set(alpha: int, S: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(set(S)))
    if not idx or len(idx) >= alpha or idx[0] < 1 or idx[-1] > alpha:
        raise ValueError("invalid index set")
    return idx


def co_nonneighborhood_mask(g: Graph, I: Sequence[int], S: Iterable[int]) -> int:
    idx = _check_index_set(len(I), S)
    out = g.full_mask
    for i in idx:
        a = I[i - 1]
        out &= ~(g.adj[a] | 1 << a)
    return out


def co_nonneighborhood(g: Graph, I: Sequence[int], S: Iterable[int]) -> tuple[int, ...]:
    """Common non-neighbourhood of the anchors ``I[i-1]`` for ``i`` in ``S``.

    ``S`` uses 1-based indices into ``I``; ``S`` must be a nonempty proper
    subset of ``{1, ..., len(I)}``. The anchors themselves are excluded from
    their own non-neighbourhood but other members of ``I`` are not.
    """
    return tuple(bits(co_nonneighborhood_mask(g, I, S)))


def trace_mask(g: Graph, I: Sequence[int], v: int) -> int:
    """Bit ``i-1`` is set iff ``v`` is adjacent to ``I[i-1]``."""
    t = 0
    for i, a in enumerate(I):
        if g.adj[v] >> a & 1:
            t |= 1 << i
    return t


@dataclass(frozen=True)
class TracePartition:
    """Vertices outside ``I`` bucketed by their exact neighbourhood trace.

    Index sets are bitmasks over ``{1..alpha}`` with index ``i`` at bit
    ``i-1``. ``m_buckets`` holds ``M`` vertices not adjacent to the last
    anchor, keyed by their (nonempty) trace; ``q_buckets`` holds ``Q``
    vertices whose trace has at least two indices.
    """

    alpha: int
    I: tuple[int, ...]
    M: tuple[int, ...]
    Q: tuple[int, ...]
    traces: dict[int, int]
    m_buckets: dict[int, tuple[int, ...]]
    q_buckets: dict[int, tuple[int, ...]]

    def m_size(self, S: int) -> int:
        return len(self.m_buckets.get(S, ()))

    def q_size(self, S: int) -> int:
        return len(self.q_buckets.get(S, ()))


def trace_partition(g: Graph, I: Sequence[int], M: Sequence[int]) -> TracePartition:
    I = tuple(I)
    alpha = len(I)
    if alpha == 0:
        raise ValueError("empty independent set")
    Iset = set(I)
    if Iset & set(M):
        raise ValueError("M intersects I")
    Mset = set(M)
    top = 1 << (alpha - 1)
    traces: dict[int, int] = {}
    m_buckets: dict[int, list[int]] = {}
    q_buckets: dict[int, list[int]] = {}
    Q = []
    for v in range(g.n):
        if v in Iset:
            continue
        t = trace_mask(g, I, v)
        traces[v] = t
        if v in Mset:
            if t and not t & top:
                m_buckets.setdefault(t, []).append(v)
        else:
            Q.append(v)
            if t.bit_count() >= 2:
                q_buckets.setdefault(t, []).append(v)
    return TracePartition(
        alpha=alpha, I=I, M=tuple(sorted(Mset)), Q=tuple(Q), traces=traces,
        m_buckets={k: tuple(v) for k, v in sorted(m_buckets.items())},
        q_buckets={k: tuple(v) for k, v in sorted(q_buckets.items())},
    )

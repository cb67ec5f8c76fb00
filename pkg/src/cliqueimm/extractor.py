"""Recursive extraction of a large strong odd clique immersion.

For a graph with independence number ``alpha >= 3`` the procedure either
finds a large common non-neighbourhood of part of a maximum independent set
``I`` and recurses into it, or recurses into ``G - I`` and then attaches one
anchor of ``I`` as a new branch vertex. The connections from that anchor to
the old branch vertices come out of a vertex-capacitated flow on A_alpha,
lifted back into ``G`` as paths that alternate between ``I`` and the rest.

The result has at least ``floor(n / beta(alpha)) - 1`` branch vertices
whenever every independence-number-two subproblem met its own target; when
one did not, the trace carries a shortfall flag.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .aalpha import AAlphaGraph, build_aalpha
from .basecase import BaseCaseResult, default_base_case
from .beta import beta, guarantee, passes_threshold
from .certificate import ImmersionCertificate, pair, verify
from .class_flow import ClassPathDecomposition, instance_from_partition, max_flow
from .graph import Graph, TracePartition, bits, co_nonneighborhood_mask, \
    max_independent_set, trace_partition

log = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    """An inequality the construction relies on failed; this is a bug."""


@dataclass
class LevelRecord:
    depth: int
    n: int
    alpha: int
    branch: str
    order: int = 0
    target: int | None = None
    index_set: tuple[int, ...] | None = None
    anchors: tuple[int, ...] | None = None
    non_neighbors: int | None = None
    flow_value: int | None = None
    trimmed: int = 0
    shortfall: bool = False


@dataclass
class ExtractionTrace:
    levels: list[LevelRecord] = field(default_factory=list)

    @property
    def shortfall(self) -> bool:
        return any(r.shortfall for r in self.levels)

    @property
    def depth(self) -> int:
        return max((r.depth for r in self.levels), default=0)

    def count(self, branch: str) -> int:
        return sum(r.branch == branch for r in self.levels)


@lru_cache(maxsize=None)
def _aalpha(alpha: int) -> AAlphaGraph:
    return build_aalpha(alpha)


def _simplify_walk(walk: Sequence[int]) -> list[int]:
    """Loop-erase a walk: on revisiting a vertex, drop the closed sub-walk."""
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            cut = pos[v]
            for w in out[cut + 1:]:
                del pos[w]
            del out[cut + 1:]
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def lift_paths(dec: ClassPathDecomposition, tp: TracePartition) -> dict[int, tuple[int, ...]]:
    """Turn a saturating class-level decomposition into one path per vertex of
    ``M`` outside the last anchor's neighbourhood.

    Each unit of a class path ``d_alpha, x_S1, ..., x_Sk, d_S`` consumes fresh
    vertices from the trace buckets ``S1..Sk`` and ``S`` (ascending ids), and
    steps between consecutive buckets through the anchor with the smallest
    shared index. Returns ``{m: path from the last anchor to m}``.
    """
    a = dec.aalpha
    I = tp.I
    q_pool = {S: list(reversed(vs)) for S, vs in tp.q_buckets.items()}
    m_pool = {S: list(reversed(vs)) for S, vs in tp.m_buckets.items()}

    def take(pool: dict[int, list[int]], S: int) -> int:
        stack = pool.get(S)
        if not stack:
            raise InvariantViolation(f"class bucket {bits(S)} exhausted while lifting")
        return stack.pop()

    out = {}
    for cpath, mult in dec.paths:
        masks = [a.vertices[v].subset for v in cpath[1:]]
        for _ in range(mult):
            walk = [I[-1]]
            for k, S in enumerate(masks):
                if k:
                    shared = masks[k - 1] & S
                    walk.append(I[(shared & -shared).bit_length() - 1])
                walk.append(take(m_pool if k == len(masks) - 1 else q_pool, S))
            path = tuple(_simplify_walk(walk))
            out[path[-1]] = path
    return out


@dataclass
class _Context:
    base: Callable[..., BaseCaseResult]
    max_len: int
    debug: bool
    trace: ExtractionTrace


def _record(ctx: _Context, rec: LevelRecord) -> None:
    ctx.trace.levels.append(rec)


def _extract(g: Graph, ctx: _Context, depth: int) -> ImmersionCertificate:
    cert = _extract_level(g, ctx, depth)
    if ctx.debug:
        rep = verify(g, cert, strong=True, odd=True, max_len=ctx.max_len)
        if not rep.passed:
            raise InvariantViolation(f"level {depth} certificate fails: {rep.problems[:3]}")
    return cert


def _extract_level(g: Graph, ctx: _Context, depth: int) -> ImmersionCertificate:
    n = g.n
    I = max_independent_set(g)
    alpha = len(I)
    rec = LevelRecord(depth, n, alpha, "")

    if alpha <= 2:
        res = ctx.base(g, alpha, ctx.max_len)
        rec.branch = f"base-alpha{alpha}"
        rec.order = res.certificate.clique_order()
        rec.shortfall = res.shortfall
        _record(ctx, rec)
        return res.certificate

    b = beta(alpha)
    if n * b.denominator < 3 * b.numerator:
        rec.branch, rec.order = "small", 1
        _record(ctx, rec)
        return ImmersionCertificate.single(0)

    target = guarantee(n, alpha)
    rec.target = target

    index_sets = sorted(S for r in range(1, alpha) for S in combinations(range(1, alpha + 1), r))
    for S in index_sets:
        U = co_nonneighborhood_mask(g, I, S)
        size = U.bit_count()
        # a common non-neighbourhood of alpha-1 anchors is a clique, and any
        # clique of the target order is already an answer
        if passes_threshold(size, n, alpha, len(S)) or (len(S) == alpha - 1 and size >= target):
            rec.branch, rec.index_set = "dense", S
            _record(ctx, rec)
            sub = g.induced(bits(U))
            cert = _extract(sub, ctx, depth + 1).relabel(sub.parent)
            rec.order = cert.clique_order()
            return cert

    rest = g.induced(v for v in range(n) if v not in set(I))
    rec.branch = "augment"
    _record(ctx, rec)
    sub_cert = _extract(rest, ctx, depth + 1).relabel(rest.parent)
    if sub_cert.clique_order() >= target:
        rec.branch = "recursive-sufficient"
        rec.order = sub_cert.clique_order()
        return sub_cert

    m_star = guarantee(n - alpha, alpha)
    M = sorted(sub_cert.branch_vertices)
    if len(M) > m_star:
        rec.trimmed = len(M) - m_star
        M = M[:m_star]
        sub_cert = sub_cert.restrict(M)

    cert, value, k = _augment(g, I, M, sub_cert, alpha)
    rec.anchors = tuple(I)
    rec.non_neighbors = k
    rec.flow_value = value
    rec.order = cert.clique_order()
    return cert


def _augment(g: Graph, I: Sequence[int], M: Sequence[int],
             sub_cert: ImmersionCertificate, alpha: int
             ) -> tuple[ImmersionCertificate, int, int]:
    Mmask = sum(1 << v for v in M)
    Imask = sum(1 << v for v in I)
    Qmask = g.full_mask & ~Mmask & ~Imask

    # the new anchor sees as much of M as any other anchor
    miss = [(Mmask & ~g.adj[a]).bit_count() for a in I]
    i_best = min(range(alpha), key=lambda i: (miss[i], i))
    anchors = [a for i, a in enumerate(I) if i != i_best] + [I[i_best]]

    for i, a in enumerate(I):
        paired = 0
        for j, b in enumerate(I):
            if j != i:
                paired |= g.adj[a] & g.adj[b]
        if not miss[i] < (paired & Qmask).bit_count():
            raise InvariantViolation(
                f"anchor {a}: |M outside N| = {miss[i]} not below "
                f"|Q in N(a) and another N| = {(paired & Qmask).bit_count()}")
    top = anchors[-1]
    seen_by_top = (Mmask & g.adj[top]).bit_count()
    if alpha * seen_by_top < len(M):
        raise InvariantViolation(
            f"new anchor sees {seen_by_top} of {len(M)} branch vertices, below 1/{alpha}")

    tp = trace_partition(g, anchors, M)
    k = sum(len(vs) for vs in tp.m_buckets.values())
    value, dec = max_flow(instance_from_partition(_aalpha(alpha), tp, g.n))
    if value < k:
        raise InvariantViolation(f"flow {value} below |M outside N(new anchor)| = {k}")

    lifted = lift_paths(dec, tp)
    paths = dict(sub_cert.paths)
    for m in M:
        if g.has_edge(top, m):
            paths[pair(top, m)] = pair(top, m)
        else:
            p = lifted.get(m)
            if p is None:
                raise InvariantViolation(f"no lifted path reaches branch vertex {m}")
            paths[pair(top, m)] = p if p[0] == min(top, m) else tuple(reversed(p))
    for m, p in lifted.items():
        if (len(p) - 1) % 2 == 0 or len(p) - 1 > 2 * alpha - 1:
            raise InvariantViolation(f"lifted path {p} has length {len(p) - 1}")
    bv = tuple(sorted(list(M) + [top]))
    return ImmersionCertificate(bv, paths), value, k


def extract(g: Graph, base: Callable[..., BaseCaseResult] = default_base_case,
            debug: bool = False) -> tuple[ImmersionCertificate, ExtractionTrace]:
    """Extract a strong odd clique immersion with paths of length at most
    ``2 alpha(g) - 1``.

    ``base`` handles subproblems of independence number at most two; it is
    called as ``base(graph, alpha, max_len)``. With ``debug`` every
    intermediate certificate is re-verified against its own graph.
    """
    if g.n == 0:
        raise ValueError("empty input")
    alpha = len(max_independent_set(g))
    ctx = _Context(base, max(1, 2 * alpha - 1), debug, ExtractionTrace())
    cert = _extract(g, ctx, 0)
    log.debug("extracted K_%d from n=%d alpha=%d", cert.clique_order(), g.n, alpha)
    return cert, ctx.trace

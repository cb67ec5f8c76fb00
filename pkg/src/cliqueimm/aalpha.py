"""The auxiliary graph A_alpha, its minimal d_alpha-D_alpha cuts, and f-blow-ups.

Vertex roles are addressed by index-set bitmasks over ``{1..alpha}`` (index
``i`` at bit ``i-1``):

* ``d_alpha`` (the source),
* ``d_S`` for every nonempty ``S`` inside ``{1..alpha-1}`` (the set D_alpha),
* ``x_S`` for every ``S`` inside ``{1..alpha}`` with ``|S| >= 2``.

Edges: ``d_alpha ~ x_S`` iff ``alpha in S``; ``d_S ~ x_T`` iff ``S & T``;
``x_S ~ x_T`` iff ``S & T`` (``S != T``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from ._flow import vertex_max_flow
from .graph import Graph, bits, mask_of

MAX_STRUCTURAL_ALPHA = 30
MAX_EXHAUSTIVE_ALPHA = 4
MAX_AUDIT_ALPHA = 5

DALPHA, DSET, XSET = "dalpha", "d", "x"


class AAlphaVertex(NamedTuple):
    role: str
    subset: int  # bitmask over {1..alpha}; 0 for d_alpha

    def label(self) -> str:
        if self.role == DALPHA:
            return "d_alpha"
        members = ",".join(str(i + 1) for i in bits(self.subset))
        return f"{self.role}{{{members}}}"


@dataclass(frozen=True)
class AAlphaGraph:
    alpha: int
    vertices: tuple[AAlphaVertex, ...]
    graph: Graph = field(repr=False)
    index: Mapping[AAlphaVertex, int] = field(repr=False, compare=False)

    @property
    def top(self) -> int:
        """Bitmask of the index ``alpha``."""
        return 1 << (self.alpha - 1)

    @property
    def low(self) -> int:
        """Bitmask of ``{1..alpha-1}``."""
        return self.top - 1

    def d(self, S: int) -> int:
        return self.index[AAlphaVertex(DSET, S)]

    def x(self, S: int) -> int:
        return self.index[AAlphaVertex(XSET, S)]

    @property
    def source(self) -> int:
        return 0

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(self.d(S) for S in range(1, self.top))

    @property
    def sink_mask(self) -> int:
        return mask_of(self.sinks)

    def label(self, v: int) -> str:
        return self.vertices[v].label()

    def labels(self, vs: Iterable[int]) -> list[str]:
        return [self.label(v) for v in vs]


def vertex_count(alpha: int) -> int:
    return 2 ** (alpha - 1) + 2 ** alpha - alpha - 1


def build_aalpha(alpha: int) -> AAlphaGraph:
    if alpha < 2:
        raise ValueError("A_alpha is defined for alpha >= 2")
    if alpha > MAX_STRUCTURAL_ALPHA:
        raise ValueError(f"alpha > {MAX_STRUCTURAL_ALPHA} exceeds the bitmask limit")
    top = 1 << (alpha - 1)
    verts = [AAlphaVertex(DALPHA, 0)]
    verts += [AAlphaVertex(DSET, S) for S in range(1, top)]
    verts += [AAlphaVertex(XSET, S) for S in range(1, 2 * top) if S.bit_count() >= 2]
    index = {v: i for i, v in enumerate(verts)}
    xs = [(i, v.subset) for i, v in enumerate(verts) if v.role == XSET]
    edges = []
    for i, S in xs:
        if S & top:
            edges.append((0, i))
    for j, v in enumerate(verts):
        if v.role == DSET:
            edges.extend((j, i) for i, T in xs if v.subset & T)
    for (i, S), (j, T) in combinations(xs, 2):
        if S & T:
            edges.append((i, j))
    return AAlphaGraph(alpha, tuple(verts), Graph.from_edges(len(verts), edges), index)


# -- cuts ---------------------------------------------------------------------

def separates(g: Graph, cut: Iterable[int], A: Iterable[int], B: Iterable[int]) -> bool:
    """True iff ``g - cut`` has no path from ``A - cut`` to ``B - cut``."""
    c = mask_of(cut)
    allowed = g.full_mask & ~c
    reach = g.connected_from(mask_of(A), allowed)
    return not reach & mask_of(B) & allowed


def is_minimal_separator(g: Graph, cut: Iterable[int], A: Iterable[int],
                         B: Iterable[int]) -> bool:
    cut = set(cut)
    A, B = list(A), list(B)
    if not separates(g, cut, A, B):
        return False
    return all(not separates(g, cut - {v}, A, B) for v in cut)


def is_cut(a: AAlphaGraph, cut: Iterable[int]) -> bool:
    return separates(a.graph, cut, [a.source], a.sinks)


def is_minimal_cut(a: AAlphaGraph, cut: Iterable[int]) -> bool:
    return is_minimal_separator(a.graph, cut, [a.source], a.sinks)


def _canonical(cuts: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(set(cuts), key=lambda c: (len(c), sorted(c)))


def enumerate_minimal_cuts(a: AAlphaGraph) -> list[frozenset[int]]:
    """Every minimal d_alpha-D_alpha cut of ``a``, each exactly once.

    A minimal cut other than ``{d_alpha}`` is the boundary of the component
    of ``d_alpha`` it leaves behind, and that component contains no vertex
    of D_alpha; so sweeping connected sets ``{d_alpha} + X'`` over subsets
    ``X'`` of the x-vertices finds them all.
    """
    if a.alpha > MAX_EXHAUSTIVE_ALPHA:
        raise ValueError("audit scale exceeded")
    g = a.graph
    xs = [i for i, v in enumerate(a.vertices) if v.role == XSET]
    found = {frozenset([a.source])}
    for r in range(1 << len(xs)):
        R = 1 | mask_of(xs[k] for k in bits(r))
        if g.connected_from(1, R) != R:
            continue
        boundary = 0
        for v in bits(R):
            boundary |= g.adj[v]
        C = frozenset(bits(boundary & ~R))
        if C not in found and is_minimal_cut(a, C):
            found.add(C)
    return _canonical(found)


def brute_force_minimal_cuts(a: AAlphaGraph) -> list[frozenset[int]]:
    """Plain sweep over all vertex subsets; slow, used as an oracle."""
    n = a.graph.n
    if n > 20:
        raise ValueError("audit scale exceeded")
    out = []
    for m in range(1 << n):
        C = bits(m)
        if is_minimal_cut(a, C):
            out.append(frozenset(C))
    return _canonical(out)


def sample_minimal_cuts(a: AAlphaGraph, samples: int, seed: int
                        ) -> list[frozenset[int]]:
    """Minimal cuts from two alternating samplers: minimum-weight cuts under
    random positive vertex weights (always minimal), and boundaries of random
    connected x-sets around ``d_alpha`` shrunk by :func:`minimalize_cut`.
    ``{d_alpha}`` is never produced."""
    if a.alpha > MAX_AUDIT_ALPHA:
        raise ValueError("audit scale exceeded")
    rng = random.Random(seed)
    n = a.graph.n
    arcs = [(u, v) for u, v in a.graph.edges] + [(v, u) for u, v in a.graph.edges]
    arcs.sort()
    g = a.graph
    xmask = mask_of(i for i, v in enumerate(a.vertices) if v.role == XSET)
    found = set()
    for k in range(samples):
        if k % 2 == 0:
            # light/heavy mixture so that different cuts win
            p = rng.random()
            w: list[int | None] = [rng.randint(1, 3) if rng.random() < p
                                   else rng.randint(100, 300) for _ in range(n)]
            w[a.source] = None
            flow = vertex_max_flow(n, arcs, w, [a.source], a.sinks)
            found.add(frozenset(flow.cut))
            continue
        # grow a random connected x-set around d_alpha and take its boundary
        R = 1
        stop = rng.random()
        while True:
            frontier = 0
            for v in bits(R):
                frontier |= g.adj[v]
            frontier &= xmask & ~R
            if not frontier or rng.random() < stop / 4:
                break
            R |= 1 << rng.choice(bits(frontier))
        boundary = 0
        for v in bits(R):
            boundary |= g.adj[v]
        C = minimalize_cut(a, boundary & ~R)
        if is_minimal_cut(a, bits(C)):
            found.add(frozenset(bits(C)))
    return _canonical(found)


def minimalize_cut(a: AAlphaGraph, cut: int) -> int:
    """Shrink a d_alpha-D_alpha cut (bitmask, not containing d_alpha) to a
    minimal one: keep the boundary of the source component, then only those
    boundary vertices that are sinks or touch the sink side."""
    g = a.graph
    full = g.full_mask
    R = g.connected_from(1 << a.source, full & ~cut)
    if R & a.sink_mask:
        raise ValueError("not a cut")
    c1 = 0
    for v in bits(R):
        c1 |= g.adj[v]
    c1 &= ~R
    Z = g.connected_from(a.sink_mask & ~c1, full & ~c1)
    return sum(1 << c for c in bits(c1)
               if (a.sink_mask >> c & 1) or g.adj[c] & Z)


# -- structural properties----------------------------------------------------

@dataclass
class CutAudit:
    cut: frozenset[int]
    a: bool = True
    b: bool = True
    c: bool = True
    d: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.a and self.b and self.c and self.d


def _nonempty_subsets(mask: int) -> list[int]:
    out = []
    s = mask
    while s:
        out.append(s)
        s = (s - 1) & mask
    return sorted(out)


def _check_hypothesis(a: AAlphaGraph, cut: frozenset[int]) -> None:
    if cut == frozenset([a.source]):
        raise ValueError("excluded hypothesis: cut is {d_alpha}")
    if not is_minimal_cut(a, cut):
        raise ValueError("cut is not a minimal d_alpha-D_alpha cut")


def audit_cut_properties(a: AAlphaGraph, cut: Iterable[int]) -> CutAudit:
    """Check the four structural properties of a minimal cut ``C != {d_alpha}``:

    (a) ``d_S`` outside C forces ``d_T`` outside C for nonempty ``T < S``;
    (b) the same for ``x_{S+alpha}``;
    (c) ``d_S`` and ``x_{T+alpha}`` outside C force ``x_R`` into C whenever
        ``|R| >= 2`` meets both ``S`` and ``T`` (``R`` inside ``{1..alpha-1}``);
    (d) ``d_S`` is outside C iff every ``x_{T+alpha}`` with ``T & S`` is in C.
    """
    cut = frozenset(cut)
    _check_hypothesis(a, cut)
    rep = CutAudit(cut)
    top, low = a.top, a.low
    subsets = _nonempty_subsets(low)
    d_out = {S: a.d(S) not in cut for S in subsets}
    x_out = {S: a.x(S | top) not in cut for S in subsets}

    for S in subsets:
        proper = [T for T in subsets if T & S == T and T != S]
        if d_out[S]:
            for T in proper:
                if not d_out[T]:
                    rep.a = False
                    rep.failures.append(f"(a) S={bits(S)} T={bits(T)}")
        if x_out[S]:
            for T in proper:
                if not x_out[T]:
                    rep.b = False
                    rep.failures.append(f"(b) S={bits(S)} T={bits(T)}")
    for S in subsets:
        if not d_out[S]:
            continue
        for T in subsets:
            if not x_out[T]:
                continue
            for R in subsets:
                if R.bit_count() >= 2 and R & S and R & T and a.x(R) not in cut:
                    rep.c = False
                    rep.failures.append(f"(c) S={bits(S)} T={bits(T)} R={bits(R)}")
    for S in subsets:
        rhs = all(not x_out[T] for T in subsets if T & S)
        if d_out[S] != rhs:
            rep.d = False
            rep.failures.append(f"(d) S={bits(S)}")
    return rep


@dataclass(frozen=True)
class JPartition:
    j1: int
    j2: int
    disjoint: bool
    covers: bool
    prop_i: bool
    prop_ii: bool
    prop_iii: bool

    @property
    def passed(self) -> bool:
        return (self.disjoint and self.covers and self.prop_i
                and self.prop_ii and self.prop_iii)

    def sets(self) -> tuple[set[int], set[int]]:
        return ({i + 1 for i in bits(self.j1)}, {i + 1 for i in bits(self.j2)})


def derive_j_partition(a: AAlphaGraph, cut: Iterable[int]) -> JPartition:
    """``J1`` is the union of all ``T`` with ``x_{T+alpha}`` outside the cut,
    ``J2`` the union of all ``S`` with ``d_S`` outside it; the returned
    record carries the verdicts on properties (i)-(iii)."""
    cut = frozenset(cut)
    _check_hypothesis(a, cut)
    top, low = a.top, a.low
    subsets = _nonempty_subsets(low)
    j1 = j2 = 0
    for S in subsets:
        if a.x(S | top) not in cut:
            j1 |= S
        if a.d(S) not in cut:
            j2 |= S
    prop_i = all(a.x(S) in cut for S in subsets
                 if S.bit_count() >= 2 and S & j1 and S & j2)
    prop_ii = all(a.x(S | top) in cut for S in subsets if S & j2)
    prop_iii = j2 != 0 or all(a.d(S) in cut for S in subsets)
    return JPartition(j1, j2, not j1 & j2, (j1 | j2) == low, prop_i, prop_ii, prop_iii)


# -- blow-ups ------------------------------------------------------------------

def build_blowup(base: Graph | AAlphaGraph, f: Sequence[int] | Mapping[int, int]
                 ) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Replace each vertex ``v`` by an independent class of ``f[v]`` vertices,
    joining classes of adjacent vertices completely. Returns the blow-up and
    the classes (new ids per base vertex)."""
    g = base.graph if isinstance(base, AAlphaGraph) else base
    sizes = [int(f[v]) for v in range(g.n)]
    if any(s < 0 for s in sizes):
        raise ValueError("blow-up sizes must be nonnegative")
    classes = []
    nxt = 0
    for s in sizes:
        classes.append(tuple(range(nxt, nxt + s)))
        nxt += s
    edges = [(x, y) for u, v in sorted(g.edges) for x in classes[u] for y in classes[v]]
    return Graph.from_edges(nxt, edges), tuple(classes)


def min_vertex_separator(g: Graph, A: Iterable[int], B: Iterable[int],
                         weight: Sequence[int] | None = None) -> tuple[int, tuple[int, ...]]:
    """Minimum (weighted) A-B vertex cut; terminals may belong to it."""
    w = list(weight) if weight is not None else [1] * g.n
    arcs = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
    flow = vertex_max_flow(g.n, arcs, w, A, B)
    return flow.value, flow.cut


@dataclass(frozen=True)
class ProjectionReport:
    cut: frozenset[int]
    union_of_classes: bool
    minimal: bool
    message: str

    @property
    def ok(self) -> bool:
        return self.union_of_classes and self.minimal


def project_blowup_cut(base: Graph, classes: Sequence[Sequence[int]],
                       blowup_cut: Iterable[int], X: Iterable[int],
                       Y: Iterable[int]) -> ProjectionReport:
    """Project a minimum ``B(Y)-B(X)`` cut of a blow-up to the base graph and
    check that it is a minimal X-Y cut there whose classes make up the
    blow-up cut exactly."""
    cb = set(blowup_cut)
    C = frozenset(v for v, cls in enumerate(classes) if cb & set(cls))
    union = set().union(*(classes[v] for v in C)) if C else set()
    union_ok = union == cb
    minimal = is_minimal_separator(base, C, list(X), list(Y))
    msg = "ok" if union_ok and minimal else "correspondence violated"
    return ProjectionReport(C, union_ok, minimal, msg)


def blowup_trial(rng: random.Random, max_vertices: int = 8,
                 max_capacity: int = 4) -> tuple[ProjectionReport, int, int]:
    """One randomized check of the blow-up cut correspondence.

    Returns the projection report, the blow-up min-cut size and the
    minimum f-weighted X-Y cut of the base found by subset enumeration.
    """
    n = rng.randint(2, max_vertices)
    p = rng.random()
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    base = Graph.from_edges(n, edges)
    f = [rng.randint(1, max_capacity) for _ in range(n)]
    X = rng.sample(range(n), rng.randint(1, max(1, n // 2)))
    Y = rng.sample([v for v in range(n) if v not in X] or list(range(n)),
                   rng.randint(1, max(1, n // 3)))
    blow, classes = build_blowup(base, f)
    bX = [y for v in X for y in classes[v]]
    bY = [y for v in Y for y in classes[v]]
    size, cut = min_vertex_separator(blow, bY, bX)
    report = project_blowup_cut(base, classes, cut, X, Y)
    best = min(sum(f[v] for v in bits(m)) for m in range(1 << n)
               if separates(base, bits(m), X, Y))
    return report, size, best


# -- audit driver -----------------------------------------------------------------

@dataclass
class AAlphaAudit:
    alpha: int
    mode: str
    cuts: int = 0
    audited: int = 0
    failures: list[tuple[list[str], list[str]]] = field(default_factory=list)
    containment_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.containment_ok and not self.failures


def check_neighborhood_containment(a: AAlphaGraph) -> bool:
    """``N(d_T)`` is inside ``N(d_S)`` whenever ``T`` is a proper subset of ``S``."""
    subsets = _nonempty_subsets(a.low)
    adj = a.graph.adj
    for S in subsets:
        for T in subsets:
            if T != S and T & S == T and adj[a.d(T)] & ~adj[a.d(S)]:
                return False
    return True


def audit_aalpha(alpha: int, exhaustive: bool = True, samples: int = 200,
                 seed: int = 0) -> AAlphaAudit:
    a = build_aalpha(alpha)
    if exhaustive:
        cuts = enumerate_minimal_cuts(a)
        mode = "exhaustive"
    else:
        cuts = sample_minimal_cuts(a, samples, seed)
        mode = f"sampled({samples}, seed={seed})"
    rep = AAlphaAudit(alpha, mode, cuts=len(cuts),
                      containment_ok=check_neighborhood_containment(a))
    for c in cuts:
        if c == frozenset([a.source]):
            continue
        rep.audited += 1
        props = audit_cut_properties(a, c)
        jp = derive_j_partition(a, c)
        if not (props.passed and jp.passed):
            reasons = list(props.failures)
            if not jp.passed:
                reasons.append(f"J-partition {jp}")
            rep.failures.append((a.labels(sorted(c)), reasons))
    return rep

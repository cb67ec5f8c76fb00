"""Exhaustive clique-immersion search for tiny graphs (n <= 8).

For each candidate branch set, largest first, every pair gets the list of
admissible simple paths (as edge bitmasks) and a backtracking search packs
one path per pair, always branching on the pair with the fewest paths still
compatible with the edges already used.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .certificate import ImmersionCertificate, pair
from .graph import Graph, bits, independence_number

MAX_ORACLE_N = 8
DEFAULT_BUDGET = 2_000_000


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class OracleResult:
    order: int | None
    witness: ImmersionCertificate | None
    status: str  # "exact" or "inconclusive"

    @property
    def exact(self) -> bool:
        return self.status == "exact"


class _Packer:
    def __init__(self, g: Graph, strong: bool, odd: bool, max_len: int | None,
                 budget: int | None):
        self.g = g
        self.strong = strong
        self.odd = odd
        self.max_len = g.n - 1 if max_len is None else max_len
        self.budget = budget
        self.nodes = 0
        self.edge_id = {e: i for i, e in enumerate(sorted(g.edges))}

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted

    def paths_between(self, u: int, v: int, forbidden: int) -> list[tuple[int, tuple[int, ...]]]:
        """Admissible simple u-v paths as (edge mask, vertices), shortest first."""
        g, out = self.g, []
        stack = [(u, (u,), 0, 1 << u)]
        while stack:
            x, verts, emask, seen = stack.pop()
            length = len(verts) - 1
            if length >= self.max_len:
                continue
            for y in bits(g.adj[x] & ~seen):
                e = 1 << self.edge_id[pair(x, y)]
                if y == v:
                    if not self.odd or (length + 1) % 2 == 1:
                        out.append((emask | e, verts + (y,)))
                    continue
                if forbidden >> y & 1:
                    continue
                stack.append((y, verts + (y,), emask | e, seen | 1 << y))
        out.sort(key=lambda t: (len(t[1]), t[1]))
        return out

    def pack(self, branch: tuple[int, ...]) -> dict[tuple[int, int], tuple[int, ...]] | None:
        forbidden = sum(1 << b for b in branch) if self.strong else 0
        options = {}
        for u, v in combinations(branch, 2):
            ps = self.paths_between(u, v, forbidden)
            if not ps:
                return None
            options[(u, v)] = ps
        failed: set[tuple[int, frozenset]] = set()
        chosen: dict[tuple[int, int], tuple[int, ...]] = {}

        def rec(used: int, todo: frozenset) -> bool:
            if not todo:
                return True
            if (used, todo) in failed:
                return False
            self.tick()
            best_key, best_opts = None, None
            for key in todo:
                opts = [p for p in options[key] if not p[0] & used]
                if not opts:
                    failed.add((used, todo))
                    return False
                if best_opts is None or len(opts) < len(best_opts):
                    best_key, best_opts = key, opts
            rest = todo - {best_key}
            for emask, verts in best_opts:
                chosen[best_key] = verts
                if rec(used | emask, rest):
                    return True
            del chosen[best_key]
            failed.add((used, todo))
            return False

        if rec(0, frozenset(options)):
            return dict(chosen)
        return None


def _search(g: Graph, strong: bool, odd: bool, max_len: int | None,
            budget: int | None) -> OracleResult:
    if g.n == 0:
        raise ValueError("empty input")
    packer = _Packer(g, strong, odd, max_len, budget)
    deg = [g.degree(v) for v in range(g.n)]
    try:
        for k in range(g.n, 1, -1):
            if comb(k, 2) > g.m:
                continue
            eligible = [v for v in range(g.n) if deg[v] >= k - 1]
            if len(eligible) < k:
                continue
            for branch in combinations(eligible, k):
                paths = packer.pack(branch)
                if paths is not None:
                    return OracleResult(k, ImmersionCertificate(branch, paths), "exact")
    except BudgetExhausted:
        return OracleResult(None, None, "inconclusive")
    return OracleResult(1, ImmersionCertificate.single(0), "exact")


def max_immersion_clique(g: Graph, budget: int | None = DEFAULT_BUDGET) -> OracleResult:
    """Largest ``k`` such that ``g`` contains ``K_k`` as an immersion."""
    if g.n > MAX_ORACLE_N:
        raise ValueError("oracle scale exceeded")
    return _search(g, strong=False, odd=False, max_len=None, budget=budget)


def max_constrained_immersion(g: Graph, strong: bool, odd: bool, max_len: int | None,
                              budget: int | None = DEFAULT_BUDGET) -> OracleResult:
    """Same search restricted to immersions with the given path constraints."""
    if g.n > MAX_ORACLE_N:
        raise ValueError("oracle scale exceeded")
    return _search(g, strong=strong, odd=odd, max_len=max_len, budget=budget)


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    alpha: int
    target: int
    order: int | None
    status: str

    @property
    def holds(self) -> bool | None:
        if self.order is None:
            return None
        return self.order >= self.target


def conjecture_report(g: Graph, budget: int | None = DEFAULT_BUDGET) -> ConjectureReport:
    """Compare the oracle order with ``ceil(n / alpha(g))``. Informational."""
    res = max_immersion_clique(g, budget)
    alpha = independence_number(g)
    target = -(-g.n // alpha)
    return ConjectureReport(g.n, alpha, target, res.order, res.status)

"""Base-case providers for graphs of independence number at most two.

The extractor only needs, for independence number two, some strong odd
immersion that is short enough; the construction from the literature that
guarantees ``K_{2 floor(n/5)}`` lives elsewhere. The default provider here is
exact for tiny graphs and greedy beyond, and reports a shortfall whenever it
lands below ``2 * floor(n / 5)`` instead of failing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Protocol

from .certificate import ImmersionCertificate, pair
from .graph import Graph, bits, independence_number, max_clique
from .oracle import MAX_ORACLE_N, max_constrained_immersion

CLIQUE_NODE_LIMIT = 200_000


@dataclass(frozen=True)
class BaseCaseResult:
    certificate: ImmersionCertificate
    shortfall: bool
    strategy: str


class BaseCaseProvider(Protocol):
    name: str

    def __call__(self, g: Graph, alpha: int, max_len: int) -> BaseCaseResult: ...


def alpha2_target(n: int) -> int:
    return 2 * (n // 5)


class _Grower:
    """Grow a strong odd immersion one branch vertex at a time.

    Paths to the newcomer are direct edges where possible, else the shortest
    odd detour (length 3, then 5 when allowed) through unused edges avoiding
    branch vertices. Interior vertices are never promoted to branch vertices
    later, which keeps the immersion strong.
    """

    def __init__(self, g: Graph, seed: tuple[int, ...], max_len: int):
        self.g = g
        self.max_len = max_len
        self.branch = list(seed)
        self.paths: dict[tuple[int, int], tuple[int, ...]] = {}
        self.avail = list(g.adj)
        self.interior = 0
        for i, u in enumerate(seed):
            for v in seed[i + 1:]:
                self._take((u, v))
                self.paths[pair(u, v)] = pair(u, v)

    def _take(self, path) -> None:
        for a, b in zip(path, path[1:]):
            self.avail[a] &= ~(1 << b)
            self.avail[b] &= ~(1 << a)

    def _give(self, path) -> None:
        for a, b in zip(path, path[1:]):
            self.avail[a] |= 1 << b
            self.avail[b] |= 1 << a

    def _detour(self, v: int, u: int, blocked: int) -> tuple[int, ...] | None:
        av = self.avail
        free = self.g.full_mask & ~blocked
        for x in bits(av[v] & free):
            hit = av[x] & av[u] & free & ~(1 << x)
            if hit:
                y = (hit & -hit).bit_length() - 1
                return (v, x, y, u)
        if self.max_len < 5:
            return None
        for x in bits(av[v] & free):
            for w in bits(av[u] & free & ~(1 << x)):
                for y in bits(av[x] & free & ~(1 << w)):
                    hit = av[y] & av[w] & free & ~(1 << x)
                    if hit:
                        z = (hit & -hit).bit_length() - 1
                        return (v, x, y, z, w, u)
        return None

    def try_add(self, v: int) -> bool:
        bmask = sum(1 << b for b in self.branch) | 1 << v
        new: dict[tuple[int, int], tuple[int, ...]] = {}
        todo = []
        for u in self.branch:
            if self.avail[v] >> u & 1:
                p = (v, u)
                self._take(p)
                new[pair(u, v)] = p
            else:
                todo.append(u)
        reserved = 0
        for u in todo:
            p = self._detour(v, u, bmask)
            if p is None:
                for q in new.values():
                    self._give(q)
                return False
            self._take(p)
            new[pair(u, v)] = p
            for w in p[1:-1]:
                reserved |= 1 << w
        self.interior |= reserved
        self.branch.append(v)
        self.paths.update(new)
        return True

    def grow(self) -> None:
        while True:
            bmask = sum(1 << b for b in self.branch)
            cands = [v for v in range(self.g.n)
                     if not bmask >> v & 1 and not self.interior >> v & 1]
            cands.sort(key=lambda v: (-(self.avail[v] & bmask).bit_count(), v))
            if not any(self.try_add(v) for v in cands):
                return

    def certificate(self) -> ImmersionCertificate:
        return ImmersionCertificate(tuple(sorted(self.branch)), dict(self.paths))


def greedy_immersion(g: Graph, max_len: int) -> ImmersionCertificate:
    seed, _ = max_clique(g, node_limit=CLIQUE_NODE_LIMIT)
    grower = _Grower(g, seed, max_len)
    grower.grow()
    return grower.certificate()


def default_base_case(g: Graph, alpha: int | None = None,
                      max_len: int = 3) -> BaseCaseResult:
    """Immersion for a graph with independence number one or two.

    ``max_len`` bounds path lengths (odd paths, strong immersion).
    """
    if g.n == 0:
        raise ValueError("empty input")
    if alpha is None:
        alpha = independence_number(g)
    if alpha > 2:
        raise ValueError("base case handles independence number <= 2 only")
    if alpha == 1:
        return BaseCaseResult(ImmersionCertificate.clique(range(g.n)), False, "clique")
    cert = None
    strategy = "greedy"
    if g.n <= MAX_ORACLE_N:
        res = max_constrained_immersion(g, strong=True, odd=True, max_len=max_len)
        if res.exact:
            cert, strategy = res.witness, "exhaustive"
    if cert is None:
        cert = greedy_immersion(g, max_len)
    return BaseCaseResult(cert, cert.clique_order() < alpha2_target(g.n), strategy)


default_base_case.name = "default"  # type: ignore[attr-defined]


def clique_only_base_case(g: Graph, alpha: int | None = None,
                          max_len: int = 3) -> BaseCaseResult:
    """A deliberately weak provider: a maximum clique and nothing more."""
    if alpha is None:
        alpha = independence_number(g)
    if alpha > 2:
        raise ValueError("base case handles independence number <= 2 only")
    clique, _ = max_clique(g, node_limit=CLIQUE_NODE_LIMIT)
    cert = ImmersionCertificate.clique(clique)
    short = alpha == 2 and cert.clique_order() < alpha2_target(g.n)
    return BaseCaseResult(cert, short, "clique")


clique_only_base_case.name = "clique-only"  # type: ignore[attr-defined]

PROVIDERS: dict[str, Callable[..., BaseCaseResult]] = {
    "default": default_base_case,
    "clique-only": clique_only_base_case,
}

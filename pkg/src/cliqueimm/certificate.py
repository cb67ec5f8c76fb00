"""Clique-immersion certificates and an independent verifier.

A certificate names the branch vertices and, for every unordered pair of
them, an explicit vertex sequence in the host graph. The verifier looks only
at the host graph and the certificate.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graph import Graph


def pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ImmersionCertificate:
    branch_vertices: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def single(cls, v: int) -> "ImmersionCertificate":
        return cls((v,), {})

    @classmethod
    def clique(cls, vertices: Iterable[int]) -> "ImmersionCertificate":
        """Certificate for a clique subgraph: every path is the direct edge."""
        vs = tuple(sorted(vertices))
        return cls(vs, {pair(u, v): pair(u, v) for u, v in combinations(vs, 2)})

    def clique_order(self) -> int:
        if not self.branch_vertices:
            raise ValueError("no branch vertices")
        return len(self.branch_vertices)

    def path(self, u: int, v: int) -> tuple[int, ...]:
        p = self.paths[pair(u, v)]
        return p if p[0] == u else tuple(reversed(p))

    def relabel(self, mapping: Sequence[int] | Mapping[int, int]) -> "ImmersionCertificate":
        """Rename every vertex ``v`` to ``mapping[v]`` (lifts a certificate from
        an induced subgraph to its parent)."""
        bv = tuple(mapping[v] for v in self.branch_vertices)
        paths = {}
        for (u, v), p in self.paths.items():
            q = tuple(mapping[x] for x in p)
            key = pair(mapping[u], mapping[v])
            paths[key] = q if q[0] == key[0] else tuple(reversed(q))
        return ImmersionCertificate(bv, paths)

    def restrict(self, keep: Iterable[int]) -> "ImmersionCertificate":
        """Drop branch vertices not in ``keep`` together with their paths."""
        keep = set(keep)
        bv = tuple(v for v in self.branch_vertices if v in keep)
        paths = {k: p for k, p in self.paths.items() if k[0] in keep and k[1] in keep}
        return ImmersionCertificate(bv, paths)

    def max_path_length(self) -> int:
        return max((len(p) - 1 for p in self.paths.values()), default=0)

    # -- serialization ------------------------------------------------------

    def to_dict(self, n: int, claims: Mapping[str, object] | None = None) -> dict:
        bv = sorted(self.branch_vertices)
        rows = []
        for u, v in combinations(bv, 2):
            p = self.paths.get((u, v))
            if p is None:
                continue
            rows.append({"u": u, "v": v, "vertices": list(self.path(u, v))})
        if claims is None:
            claims = {"strong": False, "odd": False, "max_length": self.max_path_length()}
        return {"n": n, "branch_vertices": bv, "paths": rows, "claims": dict(claims)}

    def to_json(self, n: int, claims: Mapping[str, object] | None = None) -> str:
        return json.dumps(self.to_dict(n, claims), indent=1)

    @classmethod
    def from_dict(cls, data: Mapping) -> tuple["ImmersionCertificate", int, dict]:
        bv = tuple(int(v) for v in data["branch_vertices"])
        paths = {}
        for row in data["paths"]:
            key = pair(int(row["u"]), int(row["v"]))
            if key in paths:
                raise ValueError(f"duplicate path for pair {key}")
            paths[key] = tuple(int(x) for x in row["vertices"])
        return cls(bv, paths), int(data["n"]), dict(data.get("claims", {}))

    @classmethod
    def from_json(cls, text: str) -> tuple["ImmersionCertificate", int, dict]:
        return cls.from_dict(json.loads(text))


@dataclass
class VerificationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)
    lengths: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: str, message: str) -> None:
        self.checks[check] = False
        if len(self.problems) < 50:
            self.problems.append(f"{check}: {message}")

    def summary(self) -> str:
        parts = [f"{k}={'ok' if v else 'FAIL'}" for k, v in self.checks.items()]
        return ("PASS" if self.passed else "FAIL") + " [" + ", ".join(parts) + "]"


def verify(g: Graph, c: ImmersionCertificate, strong: bool = False, odd: bool = False,
           max_len: int | None = None) -> VerificationReport:
    rep = VerificationReport()
    names = ["injective", "pairs", "paths", "edge_disjoint"]
    if strong:
        names.append("strong")
    if odd:
        names.append("odd")
    if max_len is not None:
        names.append("max_len")
    rep.checks = {k: True for k in names}

    bv = c.branch_vertices
    if not bv:
        rep.fail("injective", "no branch vertices")
    if len(set(bv)) != len(bv):
        rep.fail("injective", "repeated branch vertex")
    for v in bv:
        if not 0 <= v < g.n:
            rep.fail("injective", f"branch vertex {v} outside graph")
    bset = set(bv)

    expected = {pair(u, v) for u, v in combinations(set(bv), 2)}
    for key in expected - set(c.paths):
        rep.fail("pairs", f"no path for pair {key}")
    for key in set(c.paths) - expected:
        rep.fail("pairs", f"path for non-branch pair {key}")

    used: Counter = Counter()
    for key, p in sorted(c.paths.items()):
        if len(p) < 2 or {p[0], p[-1]} != set(key) or key[0] == key[1]:
            rep.fail("pairs", f"path {list(p)} does not join pair {key}")
            continue
        rep.lengths[key] = len(p) - 1
        if len(set(p)) != len(p):
            rep.fail("paths", f"path {list(p)} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                rep.fail("paths", f"{a}-{b} on path for {key} is not an edge")
            used[pair(a, b)] += 1
        if strong and bset.intersection(p[1:-1]):
            rep.fail("strong", f"path for {key} passes through branch vertices "
                               f"{sorted(bset.intersection(p[1:-1]))}")
        if odd and (len(p) - 1) % 2 == 0:
            rep.fail("odd", f"path for {key} has even length {len(p) - 1}")
        if max_len is not None and len(p) - 1 > max_len:
            rep.fail("max_len", f"path for {key} has length {len(p) - 1} > {max_len}")
    for e, k in sorted(used.items()):
        if k > 1:
            rep.fail("edge_disjoint", f"edge {e} used by {k} paths")
    return rep

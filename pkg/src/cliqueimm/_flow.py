"""Vertex-capacitated maximum flow by vertex splitting.

Each vertex ``v`` becomes ``v_in -> v_out`` with the vertex capacity; every
directed arc ``(u, v)`` of the input becomes ``u_out -> v_in`` with unbounded
capacity. Augmentation is Edmonds-Karp (shortest paths, BFS visiting
neighbours in insertion order), so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass
class VertexFlow:
    value: int
    arc_flow: dict[tuple[int, int], int]
    source_flow: dict[int, int]
    sink_flow: dict[int, int]
    cut: tuple[int, ...]

    def through(self, v: int) -> int:
        return self.source_flow.get(v, 0) + sum(
            f for (a, b), f in self.arc_flow.items() if b == v)


class _Network:
    __slots__ = ("head", "cap", "out")

    def __init__(self, nodes: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(nodes)]

    def add(self, u: int, v: int, c: int) -> int:
        eid = len(self.head)
        self.head += [v, u]
        self.cap += [c, 0]
        self.out[u].append(eid)
        self.out[v].append(eid + 1)
        return eid


def vertex_max_flow(n: int, arcs: Iterable[tuple[int, int]],
                    capacity: Sequence[int | None],
                    sources: Iterable[int], sinks: Iterable[int]) -> VertexFlow:
    """Maximum number of units from ``sources`` to ``sinks`` obeying vertex
    capacities (``None`` = unbounded). ``arcs`` are directed; pass both
    orientations for undirected edges.

    The returned ``cut`` is a minimum-weight vertex set separating the
    sources from the sinks (vertices on the source side of the residual
    graph whose split arc is saturated).
    """
    arcs = list(arcs)
    finite = sum(c for c in capacity if c is not None)
    inf = finite + 1
    S, T = 2 * n, 2 * n + 1
    net = _Network(2 * n + 2)
    split = [net.add(2 * v, 2 * v + 1, inf if capacity[v] is None else capacity[v])
             for v in range(n)]
    arc_ids = [net.add(2 * u + 1, 2 * v, inf) for u, v in arcs]
    src = {v: net.add(S, 2 * v, inf) for v in sorted(set(sources))}
    snk = {v: net.add(2 * v + 1, T, inf) for v in sorted(set(sinks))}

    head, cap, out = net.head, net.cap, net.out
    value = 0
    while True:
        parent = [-1] * (2 * n + 2)
        parent[S] = -2
        q = deque([S])
        while q and parent[T] == -1:
            x = q.popleft()
            for e in out[x]:
                y = head[e]
                if cap[e] > 0 and parent[y] == -1:
                    parent[y] = e
                    q.append(y)
        if parent[T] == -1:
            break
        push = inf
        y = T
        while y != S:
            e = parent[y]
            push = min(push, cap[e])
            y = head[e ^ 1]
        y = T
        while y != S:
            e = parent[y]
            cap[e] -= push
            cap[e ^ 1] += push
            y = head[e ^ 1]
        value += push
        if value >= inf:
            raise ValueError("unbounded flow: a vertex is both source and sink "
                             "with unbounded capacity")

    # residual reachability from S determines the minimum cut
    seen = [False] * (2 * n + 2)
    seen[S] = True
    q = deque([S])
    while q:
        x = q.popleft()
        for e in out[x]:
            y = head[e]
            if cap[e] > 0 and not seen[y]:
                seen[y] = True
                q.append(y)
    cut = tuple(v for v in range(n) if seen[2 * v] and not seen[2 * v + 1])

    arc_flow = {}
    for (u, v), e in zip(arcs, arc_ids):
        f = cap[e ^ 1]
        if f:
            arc_flow[(u, v)] = arc_flow.get((u, v), 0) + f
    source_flow = {v: cap[e ^ 1] for v, e in src.items() if cap[e ^ 1]}
    sink_flow = {v: cap[e ^ 1] for v, e in snk.items() if cap[e ^ 1]}
    del split
    return VertexFlow(value, arc_flow, source_flow, sink_flow, cut)


def decompose(flow: VertexFlow) -> list[tuple[tuple[int, ...], int]]:
    """Peel an integral flow into simple source-to-sink vertex paths with
    multiplicities. Flow circulating on cycles is discarded."""
    arc = dict(flow.arc_flow)
    src = dict(flow.source_flow)
    snk = dict(flow.sink_flow)
    succ: dict[int, list[int]] = {}
    for (u, v) in sorted(arc):
        succ.setdefault(u, []).append(v)

    paths: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    while True:
        starts = [v for v in sorted(src) if src[v] > 0]
        if not starts:
            break
        path = [starts[0]]
        pos = {starts[0]: 0}
        while True:
            v = path[-1]
            if snk.get(v, 0) > 0:
                break
            nxt = next((w for w in succ.get(v, ()) if arc.get((v, w), 0) > 0), None)
            if nxt is None:
                raise AssertionError("flow conservation violated during peeling")
            if nxt in pos:
                # cancel the cycle nxt -> ... -> v -> nxt and retreat
                cyc = path[pos[nxt]:] + [nxt]
                amt = min(arc[(a, b)] for a, b in zip(cyc, cyc[1:]))
                for a, b in zip(cyc, cyc[1:]):
                    arc[(a, b)] -= amt
                for w in path[pos[nxt] + 1:]:
                    del pos[w]
                del path[pos[nxt] + 1:]
                continue
            pos[nxt] = len(path)
            path.append(nxt)
        amt = min([src[path[0]], snk[path[-1]]]
                  + [arc[(a, b)] for a, b in zip(path, path[1:])])
        src[path[0]] -= amt
        snk[path[-1]] -= amt
        for a, b in zip(path, path[1:]):
            arc[(a, b)] -= amt
        key = tuple(path)
        if key not in paths:
            order.append(key)
            paths[key] = 0
        paths[key] += amt
    return [(p, paths[p]) for p in order]

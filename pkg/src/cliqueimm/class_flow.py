"""Vertex-capacitated flow from ``d_alpha`` to D_alpha inside A_alpha.

The flow value equals the largest number of vertex-disjoint paths from the
``d_alpha`` class to the union of the ``d_S`` classes in the blow-up of
A_alpha by the capacities, without ever building that blow-up.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from ._flow import VertexFlow, decompose, vertex_max_flow
from .aalpha import DSET, AAlphaGraph
from .graph import TracePartition


@dataclass(frozen=True)
class ClassFlowInstance:
    aalpha: AAlphaGraph
    capacity: tuple[int, ...]

    def __post_init__(self):
        a = self.aalpha
        if len(self.capacity) != a.graph.n:
            raise ValueError("capacity vector has wrong length")
        if any(c < 0 for c in self.capacity):
            raise ValueError("capacities must be nonnegative")
        if self.capacity[a.source] < sum(self.capacity[d] for d in a.sinks):
            raise ValueError("capacity(d_alpha) must cover the total sink capacity")

    @classmethod
    def from_map(cls, a: AAlphaGraph, capacity: Mapping[int, int] | Sequence[int],
                 source_capacity: int | None = None) -> "ClassFlowInstance":
        """Missing vertices get capacity 0; the source defaults to the total
        sink capacity."""
        if isinstance(capacity, Mapping):
            cap = [int(capacity.get(v, 0)) for v in range(a.graph.n)]
        else:
            cap = [int(c) for c in capacity]
        if source_capacity is None:
            source_capacity = max(cap[a.source], sum(cap[d] for d in a.sinks))
        cap[a.source] = source_capacity
        return cls(a, tuple(cap))

    @property
    def sink_total(self) -> int:
        return sum(self.capacity[d] for d in self.aalpha.sinks)

    def arcs(self) -> list[tuple[int, int]]:
        """Directed arcs: nothing enters ``d_alpha``, nothing leaves a ``d_S``."""
        a = self.aalpha
        out = []
        for u, v in sorted(a.graph.edges):
            for x, y in ((u, v), (v, u)):
                if y == a.source or a.vertices[x].role == DSET:
                    continue
                out.append((x, y))
        return sorted(out)


@dataclass(frozen=True)
class ClassPathDecomposition:
    """Class-level paths ``d_alpha, x_.., ..., d_S`` with multiplicities."""

    aalpha: AAlphaGraph
    paths: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def value(self) -> int:
        return sum(k for _, k in self.paths)

    def usage(self) -> Counter:
        use: Counter = Counter()
        for path, k in self.paths:
            for v in path:
                use[v] += k
        return use

    def sink_usage(self) -> Counter:
        use: Counter = Counter()
        for path, k in self.paths:
            use[path[-1]] += k
        return use

    def labelled(self) -> list[tuple[list[str], int]]:
        return [(self.aalpha.labels(p), k) for p, k in self.paths]


def instance_from_partition(a: AAlphaGraph, tp: TracePartition,
                            source_capacity: int) -> ClassFlowInstance:
    """Capacities read off the trace buckets: ``d_S`` gets ``|M_S|``, ``x_S``
    gets ``|Q_S|``."""
    cap = [0] * a.graph.n
    for S, vs in tp.m_buckets.items():
        cap[a.d(S)] = len(vs)
    for S, vs in tp.q_buckets.items():
        cap[a.x(S)] = len(vs)
    cap[a.source] = source_capacity
    return ClassFlowInstance(a, tuple(cap))


def _solve(inst: ClassFlowInstance) -> VertexFlow:
    a = inst.aalpha
    return vertex_max_flow(a.graph.n, inst.arcs(), list(inst.capacity),
                           [a.source], a.sinks)


def max_flow(inst: ClassFlowInstance) -> tuple[int, ClassPathDecomposition]:
    flow = _solve(inst)
    dec = ClassPathDecomposition(inst.aalpha, tuple(decompose(flow)))
    if dec.value != flow.value:
        raise AssertionError("decomposition lost flow")
    return flow.value, dec


def min_vertex_cut(inst: ClassFlowInstance) -> tuple[frozenset[int], int]:
    """Minimum-weight d_alpha-D_alpha vertex cut and its weight."""
    flow = _solve(inst)
    cut = frozenset(flow.cut)
    return cut, sum(inst.capacity[v] for v in cut)


def check_decomposition(inst: ClassFlowInstance, dec: ClassPathDecomposition) -> list[str]:
    """Problems with ``dec`` as a packing in ``inst``; empty when sound."""
    a = inst.aalpha
    problems = []
    for path, k in dec.paths:
        if not isinstance(k, int) or k <= 0:
            problems.append(f"non-positive or non-integral multiplicity {k!r}")
        if path[0] != a.source or a.vertices[path[-1]].role != DSET:
            problems.append(f"path {a.labels(path)} does not run d_alpha -> D_alpha")
        if len(set(path)) != len(path):
            problems.append(f"path {a.labels(path)} is not simple")
        if any(not a.graph.has_edge(u, v) for u, v in zip(path, path[1:])):
            problems.append(f"path {a.labels(path)} uses a non-edge")
    for v, used in dec.usage().items():
        if used > inst.capacity[v]:
            problems.append(f"{a.label(v)} used {used} > capacity {inst.capacity[v]}")
    return problems

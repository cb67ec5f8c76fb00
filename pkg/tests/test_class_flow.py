import itertools
import random

import networkx as nx
import pytest

from cliqueimm.aalpha import build_aalpha, build_blowup
from cliqueimm.class_flow import (ClassFlowInstance, check_decomposition, max_flow,
                                  min_vertex_cut)

from conftest import networkx_class_flow, random_class_instance


def series(a, d1=3, x12=2):
    cap = {a.d(0b1): d1, a.x(0b11): x12}
    return ClassFlowInstance.from_map(a, cap)


def test_series_bottleneck():
    a = build_aalpha(2)
    inst = series(a)
    value, dec = max_flow(inst)
    assert value == 2
    assert dec.labelled() == [(["d_alpha", "x{1,2}", "d{1}"], 2)]
    cut, w = min_vertex_cut(inst)
    assert cut == frozenset([a.x(0b11)]) and w == 2


def test_no_x_capacity_no_flow():
    a = build_aalpha(3)
    inst = ClassFlowInstance.from_map(a, {d: 2 for d in a.sinks})
    assert max_flow(inst)[0] == 0
    assert min_vertex_cut(inst)[1] == 0


def test_instance_validation():
    a = build_aalpha(2)
    with pytest.raises(ValueError):
        ClassFlowInstance(a, (0, 1))
    with pytest.raises(ValueError):
        ClassFlowInstance(a, (5, -1, 1))
    with pytest.raises(ValueError):
        ClassFlowInstance(a, (0, 3, 1))


def test_uniform_capacity_is_menger_on_a3():
    a = build_aalpha(3)
    cap = [1] * a.graph.n
    inst = ClassFlowInstance.from_map(a, cap, source_capacity=a.graph.n)
    value = max_flow(inst)[0]
    # Menger on A_3 itself: internally disjoint paths from d_3 to the sink set
    G = nx.Graph(list(a.graph.edges))
    G.add_edges_from(("T", d) for d in a.sinks)
    assert value == nx.node_connectivity(G, a.source, "T") == min_vertex_cut(inst)[1]


def test_matches_networkx(rng):
    for _ in range(200):
        inst = random_class_instance(rng, rng.randint(2, 5))
        value, dec = max_flow(inst)
        assert value == networkx_class_flow(inst)
        assert value == min_vertex_cut(inst)[1]
        assert check_decomposition(inst, dec) == []
        assert dec.value == value


def brute_packing(g, sources, sinks):
    """Maximum number of vertex-disjoint source-to-sink paths, by search over
    all simple paths that touch one source and one sink."""
    S, T = set(sources), set(sinks)
    paths = []

    def walk(path, seen):
        v = path[-1]
        if v in T:
            paths.append(frozenset(path))
            return
        for w in g.neighbors(v):
            if w not in seen and w not in S:
                walk(path + [w], seen | {w})

    for s in sources:
        walk([s], {s})
    paths = sorted(set(paths), key=len)
    best = 0

    def pack(i, used, count):
        nonlocal best
        best = max(best, count)
        if count + (len(paths) - i) <= best:
            return
        for j in range(i, len(paths)):
            if not paths[j] & used:
                pack(j + 1, used | paths[j], count + 1)

    pack(0, frozenset(), 0)
    return best


def test_matches_packing_in_explicit_blowup():
    rng = random.Random(99)
    done = 0
    while done < 60:
        alpha = rng.choice([2, 3])
        a = build_aalpha(alpha)
        cap = [rng.randint(0, 2) for _ in range(a.graph.n)]
        cap[a.source] = sum(cap[d] for d in a.sinks)
        if sum(cap) > 12:
            continue
        done += 1
        inst = ClassFlowInstance(a, tuple(cap))
        blow, classes = build_blowup(a, cap)
        # arcs never enter d_alpha nor leave a d_S; in the blow-up that is the
        # same as using each source and sink vertex only as an endpoint
        src = classes[a.source]
        snk = [v for d in a.sinks for v in classes[d]]
        assert max_flow(inst)[0] == brute_packing(blow, src, snk)


def test_saturation(rng):
    for _ in range(100):
        inst = random_class_instance(rng, rng.randint(2, 5), zero_rate=0.1)
        value, dec = max_flow(inst)
        if value == inst.sink_total:
            used = dec.sink_usage()
            assert all(used[d] == inst.capacity[d] for d in inst.aalpha.sinks)


def test_deterministic(rng):
    inst = random_class_instance(rng, 4)
    assert max_flow(inst) == max_flow(inst)


def test_check_decomposition_reports_overuse():
    a = build_aalpha(2)
    inst = series(a)
    _, dec = max_flow(inst)
    tight = ClassFlowInstance.from_map(a, {a.d(0b1): 3, a.x(0b11): 1}, source_capacity=3)
    assert any("capacity" in p for p in check_decomposition(tight, dec))

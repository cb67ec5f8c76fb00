import random
from collections import Counter

import pytest

from cliqueimm.aalpha import build_aalpha
from cliqueimm.basecase import clique_only_base_case
from cliqueimm.beta import guarantee
from cliqueimm.certificate import verify
from cliqueimm.class_flow import ClassPathDecomposition, instance_from_partition, max_flow
from cliqueimm.extractor import InvariantViolation, _simplify_walk, extract, lift_paths
from cliqueimm.generators import complement_triangle_free, disjoint_cliques, gnp, noisy_cliques
from cliqueimm.graph import Graph, independence_number, max_independent_set, trace_partition

from conftest import random_graph


def check(g, cert, alpha):
    rep = verify(g, cert, strong=True, odd=True, max_len=max(1, 2 * alpha - 1))
    assert rep.passed, rep.problems


def test_small_graph_gives_k1():
    g = disjoint_cliques(3, 3)
    cert, trace = extract(g)
    assert cert.clique_order() == 1
    assert trace.levels[0].branch == "small"


def test_three_k9():
    g = disjoint_cliques(3, 9)
    cert, trace = extract(g)
    check(g, cert, 3)
    assert cert.clique_order() >= guarantee(27, 3) == 5
    assert not trace.shortfall


def test_complete_graph():
    cert, trace = extract(Graph.complete(7))
    assert cert.clique_order() == 7 and trace.levels[0].branch == "base-alpha1"


def test_empty_input():
    with pytest.raises(ValueError, match="empty input"):
        extract(Graph.empty(0))


def test_edgeless():
    g = Graph.empty(12)
    cert, _ = extract(g)
    assert cert.clique_order() == 1


@pytest.mark.parametrize("seed", range(30))
def test_random_instances(seed):
    rng = random.Random(seed)
    k = rng.randint(3, 6)
    g = noisy_cliques(k, rng.randint(k, 90), rng.uniform(0, 0.5), seed)
    alpha = independence_number(g)
    cert, trace = extract(g, debug=True)
    check(g, cert, alpha)
    if not trace.shortfall:
        assert cert.clique_order() >= guarantee(g.n, alpha)
    assert trace.depth <= g.n


@pytest.mark.parametrize("seed", range(10))
def test_dense_random(seed):
    g = gnp(40 + seed * 6, 0.75, seed)
    alpha = independence_number(g)
    cert, trace = extract(g, debug=True)
    check(g, cert, alpha)
    if not trace.shortfall:
        assert cert.clique_order() >= guarantee(g.n, alpha)


def test_all_branches_exercised():
    seen = Counter()
    trimmed = 0
    for seed in range(40):
        rng = random.Random(seed)
        k = rng.randint(3, 5)
        g = noisy_cliques(k, rng.randint(20, 80), rng.uniform(0, 0.4), seed)
        _, trace = extract(g)
        for r in trace.levels:
            seen[r.branch] += 1
            trimmed += r.trimmed
            if r.branch == "augment":
                assert r.flow_value >= r.non_neighbors
    for b in ("dense", "augment", "recursive-sufficient", "base-alpha2", "small"):
        assert seen[b] > 0, b
    assert trimmed == 0


@pytest.mark.parametrize("alpha", range(3, 12))
def test_trim_is_unreachable(alpha):
    # alpha < beta(alpha), so removing I costs the guarantee at most one; an
    # oversized recursive result therefore always meets the final target
    for n in range(1, 400):
        assert guarantee(n, alpha) - guarantee(n - alpha, alpha) <= 1


def test_weak_base_case_is_flagged_not_hidden():
    flagged = 0
    for seed in range(6):
        # two copies of an independence-number-two graph with small cliques
        h = complement_triangle_free(30, seed)
        g = Graph.from_edges(60, list(h.edges) + [(u + 30, v + 30) for u, v in h.edges])
        cert, trace = extract(g, base=clique_only_base_case)
        check(g, cert, independence_number(g))
        flagged += trace.shortfall
        if not trace.shortfall:
            assert cert.clique_order() >= guarantee(g.n, independence_number(g))
    assert flagged > 0


def test_deterministic():
    g = noisy_cliques(4, 70, 0.3, 8)
    a, _ = extract(g)
    b, _ = extract(g)
    assert a == b


# -- lifting ----------------------------------------------------------------

def test_walk_simplification():
    assert _simplify_walk([2, 3, 0, 4, 0, 5]) == [2, 3, 0, 5]
    assert _simplify_walk([1, 2, 3, 2, 4]) == [1, 2, 4]
    assert _simplify_walk([1, 2, 3]) == [1, 2, 3]
    # parity of the walk length survives when the walk alternates two sides
    w = [9, 1, 8, 2, 7, 1, 6]
    assert (len(_simplify_walk(w)) - 1) % 2 == (len(w) - 1) % 2


def three_anchor_graph(extra):
    # anchors 0, 1, 2 stand for a_1, a_2, a_3
    return Graph.from_edges(3 + len(extra), [(a, 3 + i) for i, nb in enumerate(extra) for a in nb])


def test_single_class_path():
    # q sees a_1 and a_3, m sees a_1 only
    g = three_anchor_graph([(0, 2), (0,)])
    tp = trace_partition(g, (0, 1, 2), (4,))
    a = build_aalpha(3)
    value, dec = max_flow(instance_from_partition(a, tp, g.n))
    assert value == 1
    assert dec.labelled() == [(["d_alpha", "x{1,3}", "d{1}"], 1)]
    assert lift_paths(dec, tp) == {4: (2, 3, 0, 4)}


def test_chain_through_two_classes():
    # the only route runs x{2,3} -> x{1,2} -> d{1}
    g = three_anchor_graph([(1, 2), (0, 1), (0,)])
    tp = trace_partition(g, (0, 1, 2), (5,))
    a = build_aalpha(3)
    value, dec = max_flow(instance_from_partition(a, tp, g.n))
    assert dec.labelled() == [(["d_alpha", "x{2,3}", "x{1,2}", "d{1}"], 1)]
    path = lift_paths(dec, tp)[5]
    assert path == (2, 3, 1, 4, 0, 5)
    assert all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


def test_lift_shortcuts_repeated_anchor():
    # a hand-made decomposition that passes a_1 twice
    g = three_anchor_graph([(0, 2), (0, 1), (0,)])
    tp = trace_partition(g, (0, 1, 2), (5,))
    a = build_aalpha(3)
    dec = ClassPathDecomposition(a, (((a.source, a.x(0b101), a.x(0b011), a.d(0b001)), 1),))
    path = lift_paths(dec, tp)[5]
    assert path == (2, 3, 0, 5)


def test_lift_exhausted_bucket():
    g = three_anchor_graph([(0, 2), (0,)])
    tp = trace_partition(g, (0, 1, 2), (4,))
    a = build_aalpha(3)
    dec = ClassPathDecomposition(a, (((a.source, a.x(0b101), a.d(0b001)), 2),))
    with pytest.raises(InvariantViolation, match="exhausted"):
        lift_paths(dec, tp)


def random_trace_graph(rng):
    """Anchors 0..alpha-1 plus vertices with prescribed random traces."""
    alpha = rng.randint(2, 5)
    top = 1 << (alpha - 1)
    kinds = []
    for _ in range(rng.randint(1, 6)):
        kinds.append(("m", rng.randint(1, top - 1)))
    for _ in range(rng.randint(1, 12)):
        while True:
            S = rng.randint(1, 2 * top - 1)
            if S.bit_count() >= 2 and (not S & top or S.bit_count() == 2 or rng.random() < 0.3):
                break
        kinds.append(("q", S))
    edges = [(i, alpha + j) for j, (_, S) in enumerate(kinds) for i in range(alpha) if S >> i & 1]
    g = Graph.from_edges(alpha + len(kinds), edges)
    M = [alpha + j for j, (k, _) in enumerate(kinds) if k == "m"]
    return g, tuple(range(alpha)), M


def lifted_ok(g, I, tp, out):
    alpha = len(I)
    used = set()
    qs = []
    interior_ok = set(tp.Q) | set(I[:-1])
    for m, p in out.items():
        L = len(p) - 1
        assert p[0] == I[-1] and p[-1] == m
        assert L % 2 == 1 and L <= 2 * alpha - 1
        assert len(set(p)) == len(p)
        assert set(p[1:-1]) <= interior_ok
        # alternates between I and the rest
        assert all((p[i] in I) == (i % 2 == 0) for i in range(len(p) - 1))
        for u, v in zip(p, p[1:]):
            assert g.has_edge(u, v)
            e = (min(u, v), max(u, v))
            assert e not in used
            used.add(e)
        qs += [v for v in p[1:-1] if v not in I]
    assert len(qs) == len(set(qs))


def test_random_lifts():
    rng = random.Random(4)
    lengths = Counter()
    for _ in range(400):
        g, I, M = random_trace_graph(rng)
        tp = trace_partition(g, I, M)
        value, dec = max_flow(instance_from_partition(build_aalpha(len(I)), tp, g.n))
        if value < sum(map(len, tp.m_buckets.values())):
            continue
        out = lift_paths(dec, tp)
        assert sorted(out) == sorted(v for vs in tp.m_buckets.values() for v in vs)
        lifted_ok(g, I, tp, out)
        lengths.update(len(p) - 1 for p in out.values())
    assert lengths[3] > 0 and lengths[5] > 0


def test_lifts_on_extraction_like_instances():
    rng = random.Random(12)
    for _ in range(150):
        g = random_graph(rng, rng.randint(6, 16), rng.uniform(0.3, 0.9))
        I = max_independent_set(g)
        if len(I) < 2:
            continue
        rest = [v for v in range(g.n) if v not in I]
        M = [v for v in rest if rng.random() < 0.4]
        tp = trace_partition(g, I, M)
        value, dec = max_flow(instance_from_partition(build_aalpha(len(I)), tp, g.n))
        if value < sum(map(len, tp.m_buckets.values())):
            continue
        lifted_ok(g, I, tp, lift_paths(dec, tp))

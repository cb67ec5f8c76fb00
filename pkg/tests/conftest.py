import itertools
import random

import pytest

from cliqueimm.graph import Graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2)
                                if rng.random() < p])


def all_graphs(n):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def brute_alpha(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                return k
    return 0


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_class_instance(rng, alpha, max_cap=4, zero_rate=0.3):
    from cliqueimm.aalpha import build_aalpha
    from cliqueimm.class_flow import ClassFlowInstance
    a = build_aalpha(alpha)
    cap = [0 if rng.random() < zero_rate else rng.randint(1, max_cap)
           for _ in range(a.graph.n)]
    return ClassFlowInstance.from_map(a, cap, source_capacity=None)


def networkx_class_flow(inst):
    """Max flow of a class instance by node splitting in networkx."""
    import networkx as nx
    a = inst.aalpha
    D = nx.DiGraph()
    for v in range(a.graph.n):
        D.add_edge(("in", v), ("out", v), capacity=inst.capacity[v])
    for u, v in inst.arcs():
        D.add_edge(("out", u), ("in", v))
    D.add_edge("s", ("in", a.source))
    for d in a.sinks:
        D.add_edge(("out", d), "t")
    return nx.maximum_flow_value(D, "s", "t")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)

import json

import pytest

from cliqueimm.certificate import ImmersionCertificate, verify
from cliqueimm.graph import Graph

from conftest import cycle


def c5_cert(path02=(2, 3, 4, 0)):
    return ImmersionCertificate((0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): path02})


def test_c5_passes_everything():
    rep = verify(cycle(5), c5_cert(), strong=True, odd=True, max_len=3)
    assert rep.passed
    assert rep.lengths == {(0, 1): 1, (1, 2): 1, (0, 2): 3}
    assert c5_cert().clique_order() == 3


def test_c5_reused_edge():
    rep = verify(cycle(5), c5_cert((0, 1, 2)))
    assert not rep.passed and not rep.checks["edge_disjoint"]


def test_triangle():
    g = Graph.complete(3)
    rep = verify(g, ImmersionCertificate.clique(range(3)), strong=True, odd=True, max_len=1)
    assert rep.passed and set(rep.lengths.values()) == {1}


def test_single_and_empty():
    assert ImmersionCertificate.single(4).clique_order() == 1
    with pytest.raises(ValueError, match="no branch vertices"):
        ImmersionCertificate((), {}).clique_order()
    assert not verify(Graph.empty(2), ImmersionCertificate((), {})).passed


def test_each_flag_is_checked_separately():
    g = cycle(6)
    # 0-1 direct; 0-2 through 5,4,3? no: 0-5-4-3-2 has length 4 (even)
    cert = ImmersionCertificate((0, 2), {(0, 2): (0, 5, 4, 3, 2)})
    assert verify(g, cert).passed
    assert not verify(g, cert, odd=True).passed
    assert not verify(g, cert, max_len=3).passed
    cert = ImmersionCertificate((0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2),
                                            (0, 2): (0, 1, 2)})
    rep = verify(g, cert, strong=True)
    assert not rep.checks["strong"] and not rep.checks["edge_disjoint"]


def test_structural_failures():
    g = cycle(5)
    missing = ImmersionCertificate((0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2)})
    assert not verify(g, missing).checks["pairs"]
    wrong_end = ImmersionCertificate((0, 1), {(0, 1): (0, 4)})
    assert not verify(g, wrong_end).checks["pairs"]
    non_edge = ImmersionCertificate((0, 2), {(0, 2): (0, 2)})
    assert not verify(g, non_edge).checks["paths"]
    repeated = ImmersionCertificate((0, 1), {(0, 1): (0, 4, 0, 1)})
    assert not verify(g, repeated).checks["paths"]
    dup = ImmersionCertificate((0, 0), {})
    assert not verify(g, dup).checks["injective"]
    outside = ImmersionCertificate((7,), {})
    assert not verify(g, outside).checks["injective"]


def test_round_trip():
    c = c5_cert()
    text = c.to_json(5, {"strong": True, "odd": True, "max_length": 3})
    data = json.loads(text)
    assert data["branch_vertices"] == [0, 1, 2]
    assert [(r["u"], r["v"]) for r in data["paths"]] == [(0, 1), (0, 2), (1, 2)]
    assert data["paths"][1]["vertices"] == [0, 4, 3, 2]
    back, n, claims = ImmersionCertificate.from_json(text)
    assert n == 5 and claims["odd"]
    g = cycle(5)
    a = verify(g, c, strong=True, odd=True, max_len=3)
    b = verify(g, back, strong=True, odd=True, max_len=3)
    assert (a.checks, a.problems, a.lengths) == (b.checks, b.problems, b.lengths)


def test_relabel_and_restrict():
    c = c5_cert()
    r = c.relabel([10, 11, 12, 13, 14])
    assert r.branch_vertices == (10, 11, 12) and r.path(10, 12) == (10, 14, 13, 12)
    s = c.restrict([0, 1])
    assert s.branch_vertices == (0, 1) and list(s.paths) == [(0, 1)]

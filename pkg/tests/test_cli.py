import json

import pytest

from cliqueimm.cli import main
from cliqueimm.graph import Graph, independence_number
from cliqueimm.graphio import read_graph, write_graph

from conftest import cycle


@pytest.fixture
def c5(tmp_path):
    p = tmp_path / "c5.txt"
    write_graph(cycle(5), p)
    return p


def write_cert(path, bv, paths, n=5):
    rows = [{"u": u, "v": v, "vertices": list(p)} for (u, v), p in paths.items()]
    path.write_text(json.dumps({"n": n, "branch_vertices": bv, "paths": rows, "claims": {}}))


def test_extract_three_k9(tmp_path, capsys):
    g = tmp_path / "k9.txt"
    assert main(["gen", "--model", "disjoint-cliques", "--k", "3", "--s", "9",
                 "--seed", "0", "--output", str(g)]) == 0
    out = tmp_path / "cert.json"
    assert main(["extract", "--input", str(g), "--output", str(out), "--format", "json"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["order"] >= summary["guarantee"] == 5
    assert summary["beta"] == "9/2" and summary["verified"]
    assert main(["verify", "--graph", str(g), "--cert", str(out),
                 "--strong", "--odd", "--max-len", "5"]) == 0


def test_extract_malformed(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n1 x\n")
    assert main(["extract", "--input", str(p)]) == 2


def test_extract_missing_file(tmp_path):
    assert main(["extract", "--input", str(tmp_path / "nope.txt")]) == 2


def test_extract_c5_alpha_cap(c5, tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["extract", "--input", str(c5), "--alpha-cap", "2", "--output", str(out),
                 "--check"]) == 0
    assert "order=3" in capsys.readouterr().out
    assert main(["extract", "--input", str(c5), "--alpha-cap", "1"]) == 2


def test_extract_shortfall_exit(tmp_path):
    from cliqueimm.generators import complement_triangle_free
    p = tmp_path / "g.txt"
    write_graph(complement_triangle_free(40, 0), p)
    assert main(["extract", "--input", str(p), "--base", "clique-only"]) == 3


def test_verify_examples(c5, tmp_path):
    good = tmp_path / "good.json"
    write_cert(good, [0, 1, 2], {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 4, 3, 2)})
    assert main(["verify", "--graph", str(c5), "--cert", str(good),
                 "--strong", "--odd", "--max-len", "3"]) == 0
    bad = tmp_path / "bad.json"
    write_cert(bad, [0, 1, 2], {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 1, 2)})
    assert main(["verify", "--graph", str(c5), "--cert", str(bad)]) == 3
    k3 = tmp_path / "k3.txt"
    write_graph(Graph.complete(3), k3)
    tri = tmp_path / "tri.json"
    write_cert(tri, [0, 1, 2], {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 2)}, n=3)
    assert main(["verify", "--graph", str(k3), "--cert", str(tri), "--max-len", "1"]) == 0


def test_verify_mismatched_n(c5, tmp_path):
    cert = tmp_path / "c.json"
    write_cert(cert, [0], {}, n=6)
    assert main(["verify", "--graph", str(c5), "--cert", str(cert)]) == 2


def test_verify_malformed_cert(c5, tmp_path):
    cert = tmp_path / "c.json"
    cert.write_text("{not json")
    assert main(["verify", "--graph", str(c5), "--cert", str(cert)]) == 2


def test_gen_determinism(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        assert main(["gen", "--model", "gnp", "--n", "50", "--p", "0.7",
                     "--seed", "42", "--output", str(p)]) == 0
    assert a.read_text() == b.read_text()


def test_gen_counts(tmp_path):
    p = tmp_path / "g.txt"
    main(["gen", "--model", "disjoint-cliques", "--k", "3", "--s", "9", "--seed", "1",
          "--output", str(p)])
    g = read_graph(p)
    assert g.n == 27 and g.m == 3 * 36


def test_gen_complement_trianglefree(tmp_path):
    p = tmp_path / "g.txt"
    assert main(["gen", "--model", "complement-trianglefree", "--n", "20", "--seed", "3",
                 "--output", str(p)]) == 0
    assert independence_number(read_graph(p)) == 2


@pytest.mark.parametrize("argv", [
    ["gen", "--model", "gnp", "--n", "5", "--p", "1.5", "--seed", "1"],
    ["gen", "--model", "gnp", "--seed", "1"],
    ["gen", "--model", "nope", "--seed", "1"],
    ["gen", "--model", "gnp", "--n", "5", "--p", "0.5"],
    ["bench", "--seed", "1", "--n-max", "500"],
    ["audit-aalpha", "--alpha", "5", "--exhaustive"],
    ["audit-aalpha", "--alpha", "6", "--samples", "10"],
    ["beta", "--max", "0"],
])
def test_input_errors(argv):
    assert main(argv) == 2


def test_bench_is_byte_stable(capsys):
    argv = ["bench", "--trials", "6", "--n-max", "50", "--alpha-max", "4", "--seed", "5"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv + ["--workers", "2"]) == 0
    assert capsys.readouterr().out == first
    assert "verification_failures=0" in first


def test_audit_and_beta(capsys):
    assert main(["audit-aalpha", "--alpha", "3", "--exhaustive"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["audit-aalpha", "--alpha", "5", "--samples", "50", "--seed", "2"]) == 0
    assert main(["beta", "--max", "6"]) == 0
    out = capsys.readouterr().out
    assert "233/21" in out and "107/12" in out


def test_round_trip_through_files(tmp_path):
    from cliqueimm.certificate import ImmersionCertificate, verify
    from cliqueimm.generators import noisy_cliques
    g = noisy_cliques(4, 60, 0.3, 2)
    gp, cp = tmp_path / "g.txt", tmp_path / "c.json"
    write_graph(g, gp)
    assert main(["extract", "--input", str(gp), "--output", str(cp)]) == 0
    cert, n, claims = ImmersionCertificate.from_json(cp.read_text())
    assert n == g.n and claims["strong"] and claims["max_length"] == 7
    assert verify(g, cert, strong=True, odd=True, max_len=7).passed

import subprocess
import sys

import networkx as nx
import pytest

from arbor import io
from arbor.cli import EXIT_FORMAT, EXIT_USAGE, run, to_dot
from arbor.generators import complete, double_wheel


def test_gen_double_wheel(tmp_path, capsys):
    assert run(["gen", "double-wheel", "5"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "p 7 15"
    assert io.parse_graph(out) == double_wheel(5).graph


def test_gen_roles_sidecar(tmp_path):
    g, r = tmp_path / "g3.g", tmp_path / "g3.roles"
    assert run(["gen", "gk", "3", "-o", str(g), "--roles", str(r)]) == 0
    roles = io.parse_roles(r.read_text())
    assert len(roles) == io.read_graph(g).n and roles[1] == "S1'"


def test_gen_seeded(tmp_path, capsys):
    run(["gen", "random-tree", "12", "--seed", "4"])
    a = capsys.readouterr().out
    run(["gen", "random-tree", "12", "--seed", "4"])
    assert capsys.readouterr().out == a


def write_k4(tmp_path):
    p = tmp_path / "k4.g"
    io.write_graph(p, complete(4))
    return p


def test_param_prints_optimum(tmp_path, capsys):
    g = write_k4(tmp_path)
    c = tmp_path / "k4.c"
    assert run(["param", str(g), "--class", "induced-forest", "--mode", "cover", "-o", str(c)]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert run(["certify", str(g), str(c)]) == 0


def test_param_colouring(tmp_path, capsys):
    g = write_k4(tmp_path)
    assert run(["param", str(g), "--coloring", "edge"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert run(["param", str(g)]) == EXIT_USAGE


def test_decide_exit_codes(tmp_path, capsys):
    g = write_k4(tmp_path)
    assert run(["decide", str(g), "--class", "if", "-k", "6"]) == 0
    assert run(["decide", str(g), "--class", "if", "-k", "5"]) == 1
    assert run(["--budget-nodes", "3", "decide", str(g), "--class", "if", "-k", "5"]) == 2
    assert run(["decide", str(g), "--class", "if", "-k", "2", "--load-cap", "1:1", "--load-cap", "2:1"]) == 1
    assert run(["decide", str(g), "--class", "forest", "-k", "3", "--load-floor", "1:3"]) == 0
    assert run(["decide", str(g), "--class", "if", "-k", "2", "--load-cap", "9:1"]) == EXIT_USAGE
    assert run(["decide", str(g), "--class", "if", "-k", "2", "--load-cap", "oops"]) == EXIT_USAGE


def test_certify_reports_missing_edge(tmp_path, capsys):
    g = write_k4(tmp_path)
    bad = tmp_path / "bad.c"
    bad.write_text("c cover if 2\nf 1 1-2\nf 2 1-3 \n".replace(" \n", "\n"))
    assert run(["certify", str(g), str(bad)]) == 1
    out = capsys.readouterr().out
    assert "missing 3-4" in out


def test_format_and_usage_errors(tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("p 3 1\ne 3 1\n")
    assert run(["param", str(bad), "--class", "if"]) == EXIT_FORMAT
    assert run(["param", str(tmp_path / "absent.g"), "--class", "if"]) == EXIT_USAGE
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["gen", "cycle", "2"]) == EXIT_USAGE
    assert run(["gen", "cycle"]) == EXIT_USAGE
    assert run(["param", str(tmp_path), "--class", "nonsense"]) == EXIT_USAGE


def test_build_pipeline(tmp_path, capsys):
    g = tmp_path / "g.g"
    run(["gen", "gk", "3", "-o", str(g)])
    for op in ("degen", "acyclic-pairs", "acyclic-matchings"):
        out = tmp_path / f"{op}.c"
        assert run(["build", op, str(g), "-o", str(out)]) == 0
        assert run(["certify", str(g), str(out)]) == 0
    layers = tmp_path / "layers.c"
    assert run(["build", "layers", str(g), "--cert", str(tmp_path / "acyclic-pairs.c"),
                "--modulus", "3", "-o", str(layers)]) == 0
    cert = io.parse_certificate(layers.read_text())
    assert cert.cls.tag == "isf" and cert.k <= 9
    sf = tmp_path / "sf.c"
    run(["param", str(g), "--class", "sf", "-o", str(sf)])
    split = tmp_path / "split.c"
    assert run(["build", "leaf-split", str(g), "--cert", str(sf), "-o", str(split)]) == 0
    assert run(["certify", str(g), str(split)]) == 0
    assert run(["build", "layers", str(g)]) == EXIT_USAGE


def test_build_minor_coloring(tmp_path, capsys):
    from arbor.reproduce import canonical_subdivision_stars

    host, minor = tmp_path / "sd.g", tmp_path / "k4.g"
    run(["gen", "sd1-complete", "4", "-o", str(host)])
    io.write_graph(minor, complete(4))
    stars = tmp_path / "stars.txt"
    stars.write_text(io.format_stars(canonical_subdivision_stars(complete(4)).stars))
    isa = tmp_path / "isa.c"
    run(["param", str(host), "--class", "isf", "-o", str(isa)])
    psi = tmp_path / "psi.col"
    assert run(["build", "minor-coloring", str(host), "--cert", str(isa), "--stars", str(stars),
                "--minor", str(minor), "-o", str(psi)]) == 0
    assert run(["certify", str(minor), str(psi)]) == 0


def test_certify_coloring_and_bad_coloring(tmp_path, capsys):
    g = tmp_path / "c4.g"
    run(["gen", "cycle", "4", "-o", str(g)])
    col = tmp_path / "c.col"
    col.write_text("col acyclic-vertex 2\nv 1 1\nv 2 2\nv 3 1\nv 4 2\n")
    assert run(["certify", str(g), str(col)]) == 1
    col.write_text("col proper-vertex 2\nv 1 1\nv 2 2\nv 3 1\nv 4 2\n")
    assert run(["certify", str(g), str(col)]) == 0


def test_chain(tmp_path, capsys):
    g = write_k4(tmp_path)
    assert run(["chain", str(g)]) == 0
    lines = dict(l.split() for l in capsys.readouterr().out.splitlines())
    assert lines["ia"] == "6" and lines["a"] == "2" and len(lines) == 10


def test_dot_counts(tmp_path, capsys):
    g = tmp_path / "dw.g"
    run(["gen", "double-wheel", "6", "-o", str(g)])
    c = tmp_path / "dw.c"
    run(["param", str(g), "--class", "if", "-o", str(c)])
    capsys.readouterr()
    assert run(["dot", str(g), "--cert", str(c)]) == 0
    text = capsys.readouterr().out
    G = io.read_graph(g)
    body = [l.strip() for l in text.splitlines()[1:-1]]
    assert sum(1 for l in body if "--" in l) == G.m
    assert sum(1 for l in body if "--" not in l) == G.n
    pydot = pytest.importorskip("pydot")
    (parsed,) = pydot.graph_from_dot_data(text)
    assert len(parsed.get_edges()) == G.m


def test_dot_text_shape():
    text = to_dot(complete(3))
    assert text.startswith("graph G {") and text.rstrip().endswith("}")
    assert text.count(" -- ") == 3


def test_reproduce_subset(capsys):
    assert run(["reproduce", "--only", "1", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2 and all(l.startswith("PASS") for l in lines)


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "arbor", "gen", "complete", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("p 3 3\n")
    proc = subprocess.run([sys.executable, "-m", "arbor"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE

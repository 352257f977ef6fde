import json
import subprocess
import sys

import pytest

from regnum.cli import main
from regnum.graph import complete_minus_edge, serialize_graph6, wheel
from regnum.solver import regular_number

K4E = serialize_graph6(complete_minus_edge(4))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_exact_json(capsys):
    code, out, _ = run(capsys, "exact", "--graph6", K4E)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "exact" and doc["value"] == 2
    assert len(doc["certificate"]["classes"]) == 2


def test_exact_text_and_csv(capsys):
    code, out, _ = run(capsys, "exact", "--graph6", K4E, "--format", "text")
    assert code == 0 and "r = 2" in out and "1-regular" in out
    code, out, _ = run(capsys, "exact", "--graph6", K4E, "--format", "csv")
    header, row = out.strip().splitlines()
    assert "value" in header.split(",") and "certificate.classes" in header


def test_exact_budget_env(capsys, monkeypatch):
    g6 = serialize_graph6(wheel(9))
    monkeypatch.setenv("REGNUM_BUDGET", "2")
    assert json.loads(run(capsys, "exact", "--graph6", g6)[1])["status"] == "bounded"
    assert json.loads(run(capsys, "exact", "--graph6", g6, "--budget", "100000")[1])["value"] == 5


def test_edge_list_input(capsys, tmp_path):
    f = tmp_path / "g.edges"
    f.write_text("n 6\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "exact", "--input", str(f))
    assert code == 0 and json.loads(out)["value"] == 1


def test_graph6_file_input(capsys, tmp_path):
    f = tmp_path / "c.g6"
    f.write_text(f"{K4E}\nD?{{\n")
    code, out, _ = run(capsys, "exact", "--input", str(f))
    docs = json.loads(out)
    assert code == 0 and [d["value"] for d in docs] == [2, 4]


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--graph6", "D?{")
    doc = json.loads(out)
    assert code == 0 and doc["best_lower"] == 1 and doc["best_upper"] == 4


def test_verify_certificate(capsys, tmp_path):
    g = complete_minus_edge(4)
    gf = tmp_path / "g.edges"
    gf.write_text("".join(f"{u} {v}\n" for u, v in g.edges))
    good = tmp_path / "good.json"
    good.write_text(regular_number(g).certificate.to_json())
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"classes": [[0, 1, 2], [3, 4]], "degrees": [2, 1]}))
    assert run(capsys, "verify", "--input", str(gf), "--certificate", str(good))[0] == 0
    code, out, _ = run(capsys, "verify", "--input", str(gf), "--certificate", str(bad))
    assert code == 1 and json.loads(out)["ok"] is False
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "verify", "--input", str(gf), "--certificate", str(junk))[0] == 2


def test_color_edges(capsys):
    code, out, _ = run(capsys, "color-edges", "--graph6", "D?{", "--method", "bipartite")
    assert code == 0 and json.loads(out)["num_colors"] == 4
    code, _, err = run(capsys, "color-edges", "--graph6", serialize_graph6(wheel(5)),
                       "--method", "bipartite")
    assert code == 2 and "not bipartite" in err


def test_family_commands(capsys, tmp_path):
    assert json.loads(run(capsys, "family", "wheel", "--p", "7")[1])["claimed_r"] == 4
    doc = json.loads(run(capsys, "family", "kmn", "--m", "3", "--n", "14")[1])
    assert doc["claimed_r"] == 7 and doc["exact"]
    assert json.loads(run(capsys, "family", "kn", "--n", "9", "--minus-edge")[1])["claimed_r"] == 3
    assert json.loads(run(capsys, "family", "kn", "--n", "9")[1])["claimed_r"] == 1
    t = tmp_path / "t.edges"
    t.write_text("0 1\n0 2\n0 3\n3 4\n")
    assert json.loads(run(capsys, "family", "tree", "--input", str(t))[1])["claimed_r"] == 3
    code, _, err = run(capsys, "family", "kn", "--n", "3", "--minus-edge")
    assert code == 2 and "K_3 - e" in err
    assert run(capsys, "family", "wheel", "--p", "4")[0] == 2


def test_hunt_degree_bound(capsys, tmp_path):
    f = tmp_path / "conn5.g6"
    assert run(capsys, "corpus", "--n", "5", "--connected", "--output", str(f))[0] == 0
    assert len(f.read_text().splitlines()) == 21
    code, out, _ = run(capsys, "hunt", "degree-bound", "--input", str(f), "--summary-only")
    doc = json.loads(out)
    assert code == 0 and doc["graphs"] == 21 and doc["violations"] == []
    code, out, _ = run(capsys, "hunt", "degree-bound", "--input", str(f), "--format", "csv")
    assert out.startswith("# regnum degree-bound hunt csv v1\n")
    code, out, _ = run(capsys, "hunt", "degree-bound", "--input", str(f), "--format", "text")
    assert "violations: 0" in out


def test_hunt_kmn_and_edge_removal(capsys):
    code, out, _ = run(capsys, "hunt", "kmn", "--m-max", "3", "--n-max", "4")
    assert code == 0 and all(r["outcome"] == "equal" for r in json.loads(out))
    code, out, _ = run(capsys, "hunt", "kmn", "--m-max", "3", "--n-max", "4", "--format", "csv")
    assert out.startswith("# regnum kmn hunt csv v1")
    assert run(capsys, "hunt", "kmn", "--m-max", "4", "--n-max", "3")[0] == 2
    code, out, _ = run(capsys, "hunt", "edge-removal", "--graph6", "D~{")  # K5
    doc = json.loads(out)
    assert code == 0 and doc["r"] == 1 and doc["max_delta"] == 2


def test_corpus_trees(capsys):
    code, out, _ = run(capsys, "corpus", "--n", "7", "--trees")
    assert code == 0 and len(out.split()) == 11


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["exact"],
    ["exact", "--graph6", "D?{", "--bogus"],
    ["exact", "--graph6", "!!"],
    ["exact", "--input", "/nonexistent/file.edges"],
    ["bounds", "--graph6", "D??"],
    ["corpus", "--n", "9"],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "regnum", "exact", "--graph6", K4E],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 2

"""CLI behavior: schemas, determinism, exit codes."""

import json

import pytest

from hilbdiag.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_borel_json(capsys):
    code, out = run_cli(capsys, "borel", "--d", "2", "--n", "3", "--json",
                        "--shelling")
    assert code == 0
    data = json.loads(out)
    assert data["ideal"]["d"] == 2
    assert len(data["ideal"]["gens"]) == 3
    assert data["u_set"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert data["h_polynomial"] == [1, 2]
    assert len(data["shelling"]) == 3


def test_borel_text(capsys):
    code, out = run_cli(capsys, "borel", "--d", "3", "--n", "3")
    assert code == 0
    assert "y1*y2*y3" in out


def test_trees_count_and_ideals(capsys):
    code, out = run_cli(capsys, "trees", "--n", "3")
    assert code == 0 and "32" in out
    code, out = run_cli(capsys, "trees", "--n", "2", "--ideals")
    data = json.loads(out)
    assert data["count"] == 4


def test_trees_graph_formats(capsys):
    code, out = run_cli(capsys, "trees", "--n", "2", "--graph", "dot")
    assert code == 0
    assert out.startswith("graph moves")
    code, out = run_cli(capsys, "trees", "--n", "3", "--graph", "json")
    data = json.loads(out)
    assert data["node_count"] == 32
    swaps = [e for e in data["edges"] if any(m.startswith("swap") for m in e["moves"])]
    assert len(swaps) == 24


def test_single_tree_dot():
    from hilbdiag.cli import tree_dot
    from hilbdiag.treespace import Tree
    dot = tree_dot(Tree([(0, 1), (1, 2)]))
    assert 'label="1"' in dot and "->" in dot


def test_deterministic_output(capsys):
    _, out1 = run_cli(capsys, "gin", "--d", "2", "--n", "2", "--trials", "3",
                      "--seed", "9")
    _, out2 = run_cli(capsys, "gin", "--d", "2", "--n", "2", "--trials", "3",
                      "--seed", "9")
    assert out1 == out2


def test_gin_exit_code(capsys):
    code, out = run_cli(capsys, "gin", "--d", "2", "--n", "2", "--trials", "2",
                        "--seed", "4")
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"]


def test_tangent_ideal_file(tmp_path, capsys):
    from hilbdiag.tangent import chain_ideal
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(chain_ideal(3, 3).to_json()))
    code, out = run_cli(capsys, "tangent", "--ideal", str(path))
    assert code == 0
    assert out.strip() == "16"


def test_tangent_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(json.JSONDecodeError):
        main(["tangent", "--ideal", str(path)])


def test_tangent_chain_basis(capsys):
    code, out = run_cli(capsys, "tangent", "--basis", "chain", "--d", "2",
                        "--n", "2")
    data = json.loads(out)
    assert data["count"] == 3


def test_deligne_routes(tmp_path, capsys):
    path = tmp_path / "mats.json"
    path.write_text(json.dumps([[["z^2", 0], [0, "1"]], [["1", 0], [0, "z"]]]))
    code, out = run_cli(capsys, "deligne", "--matrices", str(path))
    sat = json.loads(out)
    assert code == 0 and sat["squarefree"]
    code, out = run_cli(capsys, "deligne", "--matrices", str(path),
                        "--route", "weight")
    wt = json.loads(out)
    assert code == 0
    assert wt["ideal"] == sat["ideal"]


def test_collineations(capsys):
    code, out = run_cli(capsys, "collineations", "--sample", "2", "--seed", "3")
    data = json.loads(out)
    assert code == 0 and data["all_ok"]
    assert all(s["counts"] == [6, 12, 66] for s in data["samples"])


def test_lafforgue(tmp_path, capsys):
    path = tmp_path / "mats.json"
    path.write_text(json.dumps([[[1, 0], [0, 1]], [[1, 2], [3, 4]]]))
    code, out = run_cli(capsys, "lafforgue", "--matrices", str(path))
    data = json.loads(out)
    assert code == 0
    assert sum(len(t["minors"]) for t in data["types"]) == 6


def test_h33_csv(tmp_path, capsys):
    out_csv = tmp_path / "table.csv"
    code, out = run_cli(capsys, "h33", "--table1", "--csv", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "class,tangent,planar,symm,orbit"
    assert len(lines) == 17


def test_verify_all_subset(capsys):
    code, out = run_cli(capsys, "verify-all", "--only", "chain-tangent")
    assert code == 0
    assert "PASS chain-tangent" in out

from __future__ import annotations

import json

import pytest

from splitfuse.cli import main
from splitfuse.families import clique_star, random_dh
from splitfuse.graph import Graph, read_graph_json, write_graph_json


@pytest.fixture
def cs_path(tmp_path):
    p = tmp_path / "cs.json"
    write_graph_json(clique_star((2, 2, 2, 2)), p)
    return p


def test_gen_family(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "--family", "cs", "--parts", "2,2,2,2", "--out", str(out)]) == 0
    assert read_graph_json(out) == clique_star((2, 2, 2, 2))


def test_gen_random_is_seeded(tmp_path, capsys):
    assert main(["--seed", "5", "gen", "--random", "dh", "--n", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["--seed", "5", "gen", "--random", "dh", "--n", "9"]) == 0
    assert capsys.readouterr().out == first
    assert Graph.from_dict(json.loads(first)) == random_dh(9, 5)


@pytest.mark.parametrize(
    "argv",
    [
        ["gen"],
        ["gen", "--family", "km"],
        ["gen", "--family", "km", "--parts", "2,x"],
        ["gen", "--random", "dh"],
        ["gen", "--family", "km", "--parts", "0,2"],
        ["nosuch"],
    ],
)
def test_input_errors(argv):
    assert main(argv) == 2


def test_decompose_reconstruct(tmp_path, cs_path):
    q = tmp_path / "q.json"
    back = tmp_path / "back.json"
    assert main(["decompose", "--in", str(cs_path), "--out", str(q)]) == 0
    assert main(["reconstruct", "--in", str(q), "--out", str(back)]) == 0
    assert back.read_bytes() == cs_path.read_bytes()


def test_roundtrip_byte_identical(tmp_path, cs_path):
    out = tmp_path / "rt.json"
    assert main(["roundtrip", "--in", str(cs_path), "--out", str(out)]) == 0
    assert out.read_bytes() == cs_path.read_bytes()


def test_missing_file(tmp_path):
    assert main(["decompose", "--in", str(tmp_path / "nope.json")]) == 2


def test_malformed_qasst(tmp_path):
    p = tmp_path / "q.json"
    p.write_text('{"quotients": [], "tree": [[[0, 0], [1, 0]]]}')
    assert main(["reconstruct", "--in", str(p)]) == 2


def test_disconnected_graph(tmp_path):
    p = tmp_path / "g.json"
    write_graph_json(Graph(3, [(0, 1)]), p)
    assert main(["decompose", "--in", str(p)]) == 2


def test_orbit(tmp_path, capsys):
    p = tmp_path / "g.json"
    write_graph_json(clique_star((2, 2, 2)), p)
    assert main(["orbit", "--in", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["orbit_size"] == 41


def test_orbit_limit(tmp_path, cs_path):
    assert main(["orbit", "--in", str(cs_path), "--max", "10"]) == 3


def test_heuristic(tmp_path, capsys):
    p = tmp_path / "g.json"
    write_graph_json(Graph(3, [(0, 1), (1, 2), (0, 2)]), p)
    assert main(["heuristic", "--in", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["edges_after"] == 2


def test_plan_and_verify(tmp_path, cs_path, capsys):
    plan = tmp_path / "plan.json"
    assert main(["plan", "--in", str(cs_path), "--out", str(plan)]) == 0
    summary = json.loads(plan.read_text())["summary"]
    assert summary == {"cz": 15, "depth": 5, "qubits": 16, "aux": 8}
    assert main(["verify", "--plan", str(plan), "--target", str(cs_path)]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_verify_failure_exit_code(tmp_path, cs_path, capsys):
    plan = tmp_path / "plan.json"
    assert main(["plan", "--in", str(cs_path), "--strategy", "naive", "--out", str(plan)]) == 0
    data = json.loads(plan.read_text())
    data["layers"][0].pop(0)
    plan.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", "--plan", str(plan), "--target", str(cs_path)]) == 1
    diag = json.loads(capsys.readouterr().out)
    assert diag["ok"] is False and diag["failing_layer"] is not None


def test_plan_non_dh(tmp_path):
    p = tmp_path / "c5.json"
    write_graph_json(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), p)
    assert main(["plan", "--in", str(p)]) == 2
    assert main(["plan", "--in", str(p), "--strategy", "generalized"]) == 0


def test_compress_flag(tmp_path, cs_path, capsys):
    assert main(["plan", "--in", str(cs_path), "--compress"]) == 0
    plan = json.loads(capsys.readouterr().out)
    assert all(plan["layers"])


def test_compare_csv(tmp_path, cs_path):
    out = tmp_path / "cmp.csv"
    assert main(["compare", "--in", str(cs_path), "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "strategy,cz,depth,qubits,aux"
    assert any(line.startswith("splitfuse,15,5,16,8") for line in lines)
    assert any(line.startswith("optimal,") for line in lines)


def test_bench(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["--seed", "3", "bench", "--sizes", "8", "--samples", "10", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 31
    assert main(["bench", "--strategies", "best"]) == 2


def test_table(capsys):
    assert main(["table", "--kind", "table2"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 26
    assert main(["table", "--kind", "table3", "--min-n", "20", "--max-n", "10"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 1


def test_json_indent(cs_path, capsys):
    assert main(["--json-indent", "2", "decompose", "--in", str(cs_path)]) == 0
    assert capsys.readouterr().out.startswith("{\n  ")


def test_help(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    for cmd in ("gen", "decompose", "reconstruct", "orbit", "heuristic", "plan", "verify", "compare", "bench", "table"):
        assert cmd in out

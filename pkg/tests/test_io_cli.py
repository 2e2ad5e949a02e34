import json

import pytest

from dualham.cli import main
from dualham.dot import to_dot
from dualham.generators import counterexample_graph, hypercube, path, seed_cube_ladder, seed_grid
from dualham.io import (
    INSTANCE_SCHEMA,
    InstanceDocument,
    ParseError,
    canonical_json,
    graph_from_dict,
    graph_from_edge_list,
    graph_to_dict,
    graph_to_edge_list,
    load_graph_text,
)
from dualham.lift import lift_trace


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# --- serialization -----------------------------------------------------------------


def test_canonical_json():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}\n'
    with pytest.raises(ValueError):
        canonical_json({"x": 1.5})


def test_graph_round_trips():
    g = hypercube(3)
    assert graph_from_dict(graph_to_dict(g)) == g
    assert graph_from_edge_list(graph_to_edge_list(g)) == g
    assert load_graph_text(canonical_json(graph_to_dict(g))) == g
    assert load_graph_text(graph_to_edge_list(g)) == g


@pytest.mark.parametrize(
    "text",
    ["{", '{"n": 2}', '{"n": "2", "edges": []}', '{"n": 2, "edges": [[0, 1.0]]}', "3 1\n0\n", "x y"],
)
def test_malformed_graphs(text):
    with pytest.raises(ParseError):
        load_graph_text(text)


def test_instance_round_trip():
    s = seed_grid(3, 4)
    doc = InstanceDocument.from_seed(s, [{"op": "gen"}])
    again = InstanceDocument.loads(doc.dumps())
    assert again == doc
    assert again.to_seed() == s
    d = json.loads(doc.dumps())
    assert d["schema"] == INSTANCE_SCHEMA and "product" not in d


def test_instance_with_product_round_trip():
    res = lift_trace(seed_cube_ladder(1), path(2))
    doc = InstanceDocument.from_seed(res.instance, (), res.product.index)
    assert InstanceDocument.loads(doc.dumps()).product == res.product.index


def test_instance_rejects_wrong_schema():
    d = json.loads(InstanceDocument.from_seed(seed_cube_ladder(1)).dumps())
    d["schema"] = "other/1"
    with pytest.raises(ParseError):
        InstanceDocument.loads(json.dumps(d))


# --- dot -----------------------------------------------------------------------------


def test_dot_styles():
    s = seed_cube_ladder(1)
    text = to_dot(s.graph, s.coloring, s.quartet)
    assert text.count("style=dotted") == s.graph.m - s.graph.n + 2 == 6
    assert text.count("penwidth=3") == s.graph.n - 2
    assert text.count("fillcolor=gray") == 4 and text.count("fillcolor=black") == 4
    assert text == to_dot(s.graph, s.coloring, s.quartet)


def test_dot_clusters():
    res = lift_trace(seed_cube_ladder(1), path(2))
    d = res.instance
    text = to_dot(d.graph, d.coloring, d.quartet, res.product.index)
    assert text.count("subgraph cluster_") == 3
    assert "subgraph" not in to_dot(d.graph, d.coloring, d.quartet, res.product.index, clusters=False)


# --- cli -------------------------------------------------------------------------------


def test_gen_and_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "seed-ladder", "2")
    assert code == 0
    inst = write(tmp_path, "seed.json", out)
    code, out, _ = run(capsys, "verify", inst)
    assert code == 0
    assert out.splitlines()[-1] == "result: PASS"
    assert "Q3: PASS" in out


def test_verify_flipped_color_fails(capsys, tmp_path):
    d = json.loads(InstanceDocument.from_seed(seed_cube_ladder(1)).dumps())
    colors = d["coloring"]["colors"]
    d["coloring"]["colors"] = ("b" if colors[0] == "r" else "r") + colors[1:]
    code, out, _ = run(capsys, "verify", write(tmp_path, "bad.json", json.dumps(d)))
    assert code == 1
    assert "hamiltonian: FAIL" in out and "result: FAIL" in out


def test_verify_overlapping_quartet_fails(capsys, tmp_path):
    d = json.loads(InstanceDocument.from_seed(seed_cube_ladder(1)).dumps())
    d["quartet"]["j_red"] = d["quartet"]["i_red"]
    code, out, _ = run(capsys, "verify", write(tmp_path, "bad.json", json.dumps(d)))
    assert code == 1
    assert "quartet-structure: FAIL" in out


def test_lift_cli(capsys, tmp_path):
    _, seed, _ = run(capsys, "gen", "seed-ladder", "1")
    _, tree, _ = run(capsys, "gen", "path-tree", "1")
    inst, t = write(tmp_path, "s.json", seed), write(tmp_path, "t.json", tree)
    code, out, _ = run(capsys, "lift", inst, t)
    assert code == 0
    doc = InstanceDocument.loads(out)
    assert doc.graph == hypercube(4)
    assert [p["op"] for p in doc.provenance] == ["gen", "lift"]
    assert run(capsys, "lift", inst, t, "--r", "0", "--l", "0")[0] == 64
    _, cyc, _ = run(capsys, "gen", "grid", "1", "1")
    assert run(capsys, "lift", inst, write(tmp_path, "c.json", cyc))[0] == 3


def test_solve_cli(capsys, tmp_path):
    _, g, _ = run(capsys, "gen", "hypercube", "3")
    code, out, _ = run(capsys, "solve", write(tmp_path, "q3.json", g), "--quartet")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "found" and doc["quartet_search"]["status"] == "found"
    assert "elapsed_us" not in doc
    _, k, _ = run(capsys, "gen", "grid", "3", "3")
    code, out, _ = run(capsys, "solve", write(tmp_path, "k.json", k), "--budget-nodes", "3")
    assert code == 2 and json.loads(out)["status"] == "aborted-budget"


def test_census_cli(capsys):
    code, out, _ = run(capsys, "census", "complete:4..5,cycle:4")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["id"] for r in rows] == ["complete:4", "complete:5", "cycle:4"]
    assert [r["dual_hamiltonian"] for r in rows] == ["yes", "no", "yes"]
    assert run(capsys, "census", "bogus:3")[0] == 64


def test_export_dot_cli(capsys, tmp_path):
    _, seed, _ = run(capsys, "gen", "seed-ladder", "1")
    code, out, _ = run(capsys, "export-dot", write(tmp_path, "s.json", seed))
    assert code == 0 and out.startswith(("graph", "strict graph"))
    assert out.count("style=dotted") == 6


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "verify", write(tmp_path, "junk.json", "{not json"))[0] == 3
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 3
    assert run(capsys, "gen", "nonsense")[0] == 64
    assert run(capsys, "gen", "hypercube", "0")[0] == 64
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 64


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert run(capsys, "gen", "counterexample", "-o", str(target))[0] == 0
    assert load_graph_text(target.read_text()) == counterexample_graph()


def test_bad_colors_are_parse_errors():
    d = json.loads(InstanceDocument.from_seed(seed_cube_ladder(1)).dumps())
    d["coloring"]["colors"] = "rgbrbbbr"
    with pytest.raises(ParseError):
        InstanceDocument.loads(json.dumps(d))

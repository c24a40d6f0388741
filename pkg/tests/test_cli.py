import json

import pytest

from raagtk.cli import main


@pytest.fixture
def graph_files(tmp_path):
    z2 = tmp_path / "z2.graph"
    z2.write_text("vertices: a b\nedge: a b\n")
    path = tmp_path / "path.graph"
    path.write_text("vertices: a b c\nedge: a b\nedge: b c\n")
    free = tmp_path / "free2.graph"
    free.write_text("vertices: a c\n")
    return {"z2": str(z2), "path": str(path), "free": str(free)}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    docs = [json.loads(line) for line in out.strip().splitlines() if line]
    assert len(docs) == 1
    assert docs[0].get("schema") == 1
    return code, docs[0]


def test_normalize_identity(graph_files, capsys):
    code, out = run(capsys, "normalize", "--graph", graph_files["path"],
                    "--word", "a a^-1")
    assert code == 0 and out.strip() == "1"


def test_normalize_json_schema(graph_files, capsys):
    code, doc = run_json(capsys, "normalize", "--graph", graph_files["z2"],
                         "--word", "b a")
    assert code == 0
    assert doc["normal_form"] == "a b" and doc["length"] == 2


def test_multiply_median(graph_files, capsys):
    code, out = run(capsys, "multiply", "--graph", graph_files["z2"],
                    "--word", "a", "--word", "a^-1")
    assert code == 0 and out.strip() == "1"
    code, out = run(capsys, "median", "--graph", graph_files["z2"],
                    "--word", "1", "--word", "a b", "--word", "a b^-1")
    assert code == 0 and out.strip() == "a"


def test_unknown_vertex_error_json(graph_files, capsys):
    code, out = run(capsys, "normalize", "--graph", graph_files["path"],
                    "--word", "z", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "unknown_vertex" and doc["schema"] == 1


def test_usage_error_exit_2(graph_files, capsys):
    assert main(["normalize", "--graph", graph_files["z2"]]) == 2


def test_graph_dump_round_trip(graph_files, capsys, tmp_path):
    code, out = run(capsys, "graph", "dump", "--graph", graph_files["path"])
    assert code == 0
    f2 = tmp_path / "copy.graph"
    f2.write_text(out)
    code2, out2 = run(capsys, "graph", "dump", "--graph", str(f2))
    assert out2 == out


def test_cmp_defect_cli(graph_files, capsys):
    code, doc = run_json(capsys, "cmp", "defect", "--graph", graph_files["z2"],
                         "--dls", "twist v=b z=a", "--radius", "4",
                         "--jobs", "1")
    assert code == 0
    assert doc["radius"] == 4 and doc["defect"] == 4
    assert set(doc["witness"]) == {"x", "y", "p"}


def test_cmp_certify_cli(graph_files, capsys):
    code, doc = run_json(capsys, "cmp", "certify", "--graph", graph_files["free"],
                         "--dls", "fold v=a z=c")
    assert code == 0 and doc["verdict"] == "CMP_by_Thm"


def test_dls_build_apply_certify(graph_files, capsys):
    code, doc = run_json(capsys, "dls", "build", "--graph", graph_files["z2"],
                         "--vertex", "b", "--z", "a")
    assert code == 0 and doc["kind"] == "twist" and doc["verified"]
    code, out = run(capsys, "dls", "apply", "--graph", graph_files["z2"],
                    "--dls", "twist v=b z=a", "--word", "b")
    assert out.strip() == "a b"
    code, doc = run_json(capsys, "dls", "certify", "--graph", graph_files["z2"],
                         "--dls", "twist v=b z=a", "--max-power", "6",
                         "--probes", "b")
    assert doc["certificate"] == "NOT_INNER_UP_TO(6)"


def test_element_subcommands(graph_files, capsys):
    code, doc = run_json(capsys, "element", "gamma", "--graph",
                         graph_files["path"], "--word", "c a c^-1")
    assert doc["gamma"] == ["a"]
    code, doc = run_json(capsys, "element", "li", "--graph",
                         graph_files["z2"], "--word", "a b")
    assert doc["components"] == ["a", "b"]
    code, doc = run_json(capsys, "element", "root", "--graph",
                         graph_files["z2"], "--word", "a b a b")
    assert doc["root"] == "a b" and doc["exponent"] == 2
    code, doc = run_json(capsys, "element", "centralizer", "--graph",
                         graph_files["path"], "--word", "1")
    assert doc["whole_group"] is True


def test_tree_subcommands(graph_files, capsys):
    code, out = run(capsys, "tree", "dist", "--graph", graph_files["path"],
                    "--vertex", "b", "--word", "1", "--word", "a b c b")
    assert out.strip() == "2"
    code, out = run(capsys, "tree", "length", "--graph", graph_files["path"],
                    "--vertex", "b", "--word", "a b")
    assert out.strip() == "1"
    code, doc = run_json(capsys, "tree", "stab", "--graph", graph_files["path"],
                         "--vertex", "b", "--start", "1", "--end", "b")
    assert doc["support"] == ["a", "c"]
    code, doc = run_json(capsys, "tree", "almost-stab", "--graph",
                         graph_files["z2"], "--vertex", "a",
                         "--start", "1", "--end", "a a a", "--s", "1",
                         "--radius", "2")
    assert "a" in doc["elements"]


def test_subgroup_subcommands(graph_files, capsys):
    code, doc = run_json(capsys, "subgroup", "validate", "--graph",
                         graph_files["z2"], "--subgroup", "roots=a support=b")
    assert doc["valid"] is True
    code, out = run(capsys, "subgroup", "member", "--graph", graph_files["path"],
                    "--subgroup", "support=a,b", "--word", "a b")
    assert out.strip() == "yes"
    code, doc = run_json(capsys, "subgroup", "intersect", "--graph",
                         graph_files["path"], "--subgroup", "support=a,b",
                         "--subgroup2", "support=b,c", "--radius", "4")
    assert code == 0 and doc["roots"] == ["b"] and doc["support"] == []


def test_decomp_subcommands(graph_files, capsys):
    code, doc = run_json(capsys, "decomp", "good", "--graph",
                         graph_files["path"], "--word", "c c c")
    assert doc["count"] == 1 and doc["bound_ok"]
    code, doc = run_json(capsys, "decomp", "chain", "--graph",
                         graph_files["path"], "--word", "b b b",
                         "--tree-vertex", "b")
    assert doc["s"] == 1 and doc["bounds_ok"]
    code, doc = run_json(capsys, "decomp", "classify", "--graph",
                         graph_files["z2"], "--word", "a a", "--label", "a")
    assert doc["case"] == "cyclic_case" and doc["element"] == "a"


def test_closure_cli(graph_files, capsys):
    code, doc = run_json(capsys, "closure", "--graph", graph_files["z2"],
                         "--tuple", "1", "--tuple", "a a", "--tuple", "a b")
    assert code == 0 and doc["size"] > 3 and doc["truncated"] is False


def test_deterministic_output(graph_files, capsys):
    args = ["cmp", "defect", "--graph", graph_files["z2"],
            "--dls", "twist v=b z=a", "--radius", "3", "--jobs", "1", "--json"]
    _, out1 = run(capsys, *args[:-1])
    _, out2 = run(capsys, *args[:-1])
    assert out1 == out2

import json
from alexmod.__main__ import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, run_cli
from alexmod.models import circle, wedge
from alexmod.twisted import complex_to_json

def run_json(capsys, args):
    "Run alexmod with JSON output and return the exit code and the parsed document."
    code = run_cli(args + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None

def terms(doc):
    return dict((tuple(x["exps"]), x["num"]) for x in doc["terms"])

def test_help(capsys):
    assert run_cli(["--help"]) == EXIT_OK
    assert "alexander" in capsys.readouterr().out

def test_usage_errors(capsys):
    assert run_cli([]) == EXIT_INPUT
    assert run_cli(["alexander", "--degree", "1"]) == EXIT_INPUT
    assert run_cli(["model", "klein-bottle"]) == EXIT_INPUT

def test_negative_degree(capsys, write_json):
    path = write_json("circle.json", complex_to_json(*circle(1)))
    assert run_cli(["alexander", "--input", path, "--degree", "-1"]) == EXIT_INPUT
    assert "nonnegative" in capsys.readouterr().err

def test_alexander_s0(capsys, write_json):
    path = write_json("wedge.json", complex_to_json(*wedge([1, 0])))
    code, doc = run_json(capsys, ["alexander", "--input", path, "--degree", "1", "--s0", "--verify"])
    assert code == EXIT_OK
    assert doc == {"qdim": 1, "t_ops": [[[1]]]}

def test_alexander_module(capsys, write_json):
    path = write_json("circle.json", complex_to_json(*circle(1)))
    code, doc = run_json(capsys, ["alexander", "--input", path, "--degree", "1", "--verify"])
    assert code == EXIT_OK
    assert doc["degree"] == 1 and doc["kind"] == "cohomology"
    assert doc["decomposition"]["free_rank"] == 0
    assert terms(doc["alexander_polynomial"]) == {(1,): "1", (0,): "-1"}
    assert run_cli(["alexander", "--input", path, "--degree", "1"]) == EXIT_OK
    assert "alexander polynomial: t - 1" in capsys.readouterr().out

def test_alexander_homology(capsys, write_json):
    path = write_json("circle.json", complex_to_json(*circle(1)))
    code, doc = run_json(capsys, ["alexander", "--input", path, "--degree", "0", "--homology", "--verify"])
    assert code == EXIT_OK
    assert doc["kind"] == "homology"
    two = write_json("circle2.json", complex_to_json(*circle([1, 0])))
    assert run_cli(["alexander", "--input", two, "--degree", "0", "--homology"]) == EXIT_INPUT

def test_alexander_bad_degree(capsys, write_json):
    path = write_json("circle.json", complex_to_json(*circle(1)))
    assert run_cli(["alexander", "--input", path, "--degree", "5"]) == EXIT_INPUT
    assert "out of range" in capsys.readouterr().err

def test_mellin(capsys, write_json):
    path = write_json("local.json", {"n": 1, "monodromies": [[[1, 1], [0, 1]]]})
    code, doc = run_json(capsys, ["mellin", "--input", path, "--verify"])
    assert code == EXIT_OK
    assert doc == {"degree": 1, "module": {"qdim": 2, "t_ops": [[[1, -1], [0, 1]]]}}

def test_mellin_rational_entries(capsys, write_json):
    path = write_json("local.json", {"n": 1, "monodromies": [[["2/3"]]]})
    code, doc = run_json(capsys, ["mellin", "--input", path])
    assert code == EXIT_OK
    assert doc["module"]["t_ops"] == [[["3/2"]]]

def test_fibration(capsys, write_json, pencil_document):
    path = write_json("pencil.json", pencil_document)
    code, doc = run_json(capsys, ["fibration", "--input", path, "--degree", "2", "--verify"])
    assert code == EXIT_OK
    assert doc == {"qdim": 2, "t_ops": [[[1, -1], [0, 1]]]}
    code, doc = run_json(capsys, ["fibration", "--input", path, "--degree", "1", "--coinvariants"])
    assert code == EXIT_OK
    assert doc["qdim"] == 2

def test_module_snf(capsys, write_json):
    path = write_json("module.json", {"nvars": 1, "generators": 2,
                                      "presentation": [["t - 1", "t"], [0, "t - 1"]]})
    code, doc = run_json(capsys, ["module", "--input", path, "--snf", "--verify"])
    assert code == EXIT_OK
    assert doc["decomposition"]["free_rank"] == 0
    assert len(doc["decomposition"]["factors"]) == 1
    assert terms(doc["alexander_polynomial"]) == {(2,): "1", (1,): "-2", (0,): "1"}
    assert len(doc["diagonal"]) == 2

def test_module_s0(capsys, write_json):
    path = write_json("module.json", {"nvars": 2, "generators": 1, "presentation": [["t1 - 1", "t2 - 1"]]})
    code, doc = run_json(capsys, ["module", "--input", path, "--s0", "--verify"])
    assert code == EXIT_OK
    assert doc == {"qdim": 1, "t_ops": [[[1]], [[1]]]}
    assert run_cli(["module", "--input", path, "--snf"]) == EXIT_INPUT

def test_module_needs_a_mode(capsys, write_json):
    path = write_json("module.json", {"nvars": 1, "generators": 1, "presentation": [["t - 1"]]})
    assert run_cli(["module", "--input", path]) == EXIT_INPUT
    assert run_cli(["module", "--input", path, "--snf", "--s0"]) == EXIT_INPUT

def test_check(capsys, write_json):
    bundle = {"2": {"qdim": 2, "t_ops": [[[1, -1], [0, 1]]]}, "context": {"n": 1, "d": 1}}
    code, doc = run_json(capsys, ["check", "--input", write_json("ok.json", bundle), "--verify"])
    assert code == EXIT_OK
    assert all(c["status"] != "violation" for c in doc["checks"])
    bundle["0"] = {"qdim": 1, "t_ops": [[[1]]]}
    code, doc = run_json(capsys, ["check", "--input", write_json("bad.json", bundle)])
    assert code == EXIT_VIOLATION
    assert "vanishing[0]" in [c["name"] for c in doc["checks"] if c["status"] == "violation"]

def test_check_with_context_file(capsys, write_json):
    bundle = write_json("bundle.json", {"modules": {"2": {"qdim": 2, "t_ops": [[[1, -1], [0, 1]]]}}})
    assert run_cli(["check", "--input", bundle]) == EXIT_INPUT
    context = write_json("context.json", {"n": 1, "d": 1, "smooth_total_space": True, "proper": True})
    assert run_cli(["check", "--input", bundle, "--context", context]) == EXIT_VIOLATION
    assert "semisimple[2]" in capsys.readouterr().out

def test_model(capsys, tmp_path):
    code, doc = run_json(capsys, ["model", "circle", "--winding", "2"])
    assert code == EXIT_OK
    assert doc["vertices"] == 3
    assert {"edge": [0, 1], "value": [2]} in doc["cocycle"]["edges"]
    out = tmp_path / "torus.json"
    assert run_cli(["model", "torus", "-o", str(out), "--format", "json"]) == EXIT_OK
    assert json.loads(out.read_text())["cocycle"]["n"] == 1
    assert run_cli(["model", "wedge", "--winding", "1,x"]) == EXIT_INPUT

def test_missing_input(capsys, tmp_path):
    assert run_cli(["mellin", "--input", str(tmp_path / "nothing.json")]) == EXIT_INPUT
    assert "Failed to read" in capsys.readouterr().err

def test_results_feed_the_checker(capsys, write_json, pencil_document):
    path = write_json("pencil.json", pencil_document)
    code, doc = run_json(capsys, ["fibration", "--input", path, "--degree", "2"])
    assert code == EXIT_OK
    bundle = write_json("bundle.json", {"2": doc, "context": {"n": 1, "d": 1}})
    code, report = run_json(capsys, ["check", "--input", bundle])
    assert code == EXIT_OK
    jordan = [c for c in report["checks"] if c["name"] == "jordan[2]"][0]
    assert jordan["expected"]["max_block"] == 2
    assert jordan["observed"]["nilpotence_index"] == 2

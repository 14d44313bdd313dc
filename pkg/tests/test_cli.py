import io
import json

import jsonschema
import pytest

from homog3 import schemas
from homog3.cli import main
from homog3.constructions import KINDS, build
from homog3.core import dumps, load, save


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(list(map(str, argv)), stdout=out)
    return code, out.getvalue()


def json_report(argv):
    code, text = run(list(argv) + ["--json"])
    report = json.loads(text)
    jsonschema.validate(report, schemas.for_report(report))
    return code, report


@pytest.fixture
def files(tmp_path):
    paths = {}
    for kind, seed in [("cover_cgamma", 2), ("product", 0), ("quotient_random", 1), ("pentagonP", 0),
                       ("random_ngraph", 3)]:
        p = tmp_path / f"{kind}.json"
        save(build(kind, seed=seed), p)
        paths[kind] = p
    return paths


def test_build_then_classify(tmp_path):
    g = tmp_path / "g.json"
    code, _ = run(["build", "cgamma", "--classes", 4, "--seed", 7, "-o", g])
    assert code == 0
    code, report = json_report(["classify", g])
    assert code == 0 and report["display"] == "cover CΓ"
    code, text = run(["classify", g, "--text"])
    assert code == 0 and 'report: "C(Γ) [4 classes]"' in text


def test_build_writes_graph_schema(tmp_path):
    for kind in KINDS:
        p = tmp_path / f"{kind}.json"
        assert run(["build", kind, "--seed", 1, "-o", p])[0] == 0
        jsonschema.validate(json.loads(p.read_text()), schemas.load("ngraph"))
        assert load(p) == build(kind, seed=1)


def test_build_logs_seed(tmp_path, capsys):
    run(["build", "class_random", "--seed", 42, "-o", tmp_path / "x.json"])
    assert "seed=42" in capsys.readouterr().err


def test_build_params_and_spec(tmp_path):
    p = tmp_path / "w.json"
    assert run(["build", "wreath", "--sizes", "3,2", "--colors", "S,R", "-o", p])[0] == 0
    assert load(p).size == 6
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"kind": "class_random", "params": {"classes": 3, "class_size": 5}, "seed": 9}))
    q = tmp_path / "q.json"
    assert run(["build", "ignored", "--spec", spec, "-o", q])[0] == 0
    assert load(q) == build("class_random", seed=9, classes=3, class_size=5)
    assert run(["build", "product", "--param", "m=2", "-o", q])[0] == 0
    assert load(q).size == 10


def test_check_ap_matches_oracle():
    import oracles

    code, report = json_report(["check", "ap", "--colors", "R,S,T", "--forbid", "RRR,SSS,TTT", "--max-size", 3])
    expect = oracles.ap_holds(3, ["RRR", "SSS", "TTT"], 3)
    assert report["holds"] == expect and code == (0 if expect else 1)
    code, report = json_report(["check", "jep", "--colors", "R,S", "--forbid", "RRR"])
    assert code == 0 and report["holds"]


def test_check_ap_failure_exit_code():
    code, report = json_report(["check", "ap", "--colors", "R,S,T", "--forbid", "RRR,SSS,TTT", "--max-size", 4])
    assert code == 1 and not report["holds"] and report["first_failure"] is not None


def test_check_homogeneity(files, tmp_path):
    code, report = json_report(["check", "homogeneity", files["pentagonP"], "--k", 5])
    assert code == 0 and report["holds"]
    p = tmp_path / "p3.json"
    p.write_text('{"colors":["E","N"],"size":3,"matrix":"001"}\n')
    code, report = json_report(["check", "homogeneity", p, "--k", 1])
    assert code == 1 and report["counterexample"] is not None


def test_check_extension(files, capsys):
    code, report = json_report(["check", "extension", files["random_ngraph"], "--demand", "1,1,0"])
    assert code == 0 and report["exhaustive"] and report["satisfied_fraction"] == 1.0
    code, report = json_report(["check", "extension", files["cover_cgamma"], "--demand", "2,0,0"])
    assert code == 1
    code, report = json_report(["check", "extension", files["random_ngraph"], "--demand", "1,1,1",
                                "--samples", 1000, "--seed", 5])
    assert report["seed"] == 5 and not report["exhaustive"]
    assert "seed=5" in capsys.readouterr().err


def test_analyze(files):
    code, report = json_report(["analyze", files["cover_cgamma"]])
    assert code == 0 and report["equivalences"][0]["colors"] == ["R"]
    code, report = json_report(["analyze", files["cover_cgamma"], "--pair", 0, 1, "--eq", "R", "--color", "S"])
    assert report["pair"]["pair_type"] == "two_matchings" and report["pair"]["r"] == 1
    code, report = json_report(["analyze", files["random_ngraph"], "--diameter"])
    assert set(report) == {"command", "size", "colors", "diameter"}


def test_find(files, tmp_path):
    cover = tmp_path / "c12.json"
    save(build("cover_cgamma", seed=0, classes=12), cover)
    code, report = json_report(["find", "halfgraph", cover, "--color", "S", "--order", 3])
    assert code == 0 and report["found"] and len(report["a"]) == 3
    code, report = json_report(["find", "halfgraph", files["pentagonP"], "--color", "R", "--order", 1])
    assert code == 1 and not report["found"]
    code, report = json_report(["find", "clique", files["product"], "--color", "S"])
    assert code == 0 and report["size"] == 5


def test_quotient_and_lines(files, tmp_path):
    q = tmp_path / "q.json"
    assert run(["quotient", files["quotient_random"], "--eq", "R", "-o", q])[0] == 0
    assert load(q).size == 24
    assert run(["quotient", files["product"], "--eq", "T"])[0] == 2  # T is not an equivalence
    assert run(["quotient", files["cover_cgamma"], "--eq", "R"])[0] == 1
    code, report = json_report(["lines", files["product"], "--color", "R", "--profile"])
    assert code == 0 and report["semilinear"] and report["edge_count_conserved"]
    code, report = json_report(["lines", files["random_ngraph"], "--color", "R"])
    assert code == 1 and not report["semilinear"]


def test_export_round_trip(files, tmp_path):
    dot = tmp_path / "g.dot"
    assert run(["export", files["cover_cgamma"], "--dot", "-o", dot])[0] == 0
    g = load(files["cover_cgamma"])
    assert dot.read_text().count(" -- ") == g.size * (g.size - 1) // 2
    again = tmp_path / "again.json"
    assert run(["export", files["cover_cgamma"], "--json", "-o", again])[0] == 0
    assert again.read_bytes() == files["cover_cgamma"].read_bytes()


def test_classify_inconclusive(tmp_path):
    p = tmp_path / "r.json"
    save(build("random_ngraph", seed=0, v=10), p)
    code, report = json_report(["classify", p])
    assert code == 1 and report["family"] == "inconclusive"


def test_usage_errors(tmp_path, capsys):
    assert run([])[0] == 2
    assert run(["build"])[0] == 2
    assert run(["build", "nope"])[0] == 2
    assert run(["check", "homogeneity", tmp_path / "missing.json"])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["classify", bad])[0] == 2
    assert run(["--budget", "bogus=3", "classify", bad])[0] == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_budget_exit_code(files):
    code, _ = run(["--budget", "homogeneity_size=4", "check", "homogeneity", files["pentagonP"]])
    assert code == 3


def test_budget_env_override(files, monkeypatch):
    monkeypatch.setenv("HOMOG3_BUDGET_HOMOGENEITY_SIZE", "4")
    assert run(["check", "homogeneity", files["pentagonP"]])[0] == 3


def test_determinism(tmp_path):
    argvs = [
        ["build", "random_ngraph", "--seed", 8, "--v", 40],
        ["build", "cgamma", "--classes", 16, "--seed", 3],
    ]
    for argv in argvs:
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(argv + ["-o", a])
        run(argv + ["-o", b])
        assert a.read_bytes() == b.read_bytes()
    g = tmp_path / "g.json"
    run(["build", "random_ngraph", "--seed", 8, "--v", 60, "-o", g])
    for argv in (["classify", g, "--min-size", 8, "--json"], ["analyze", g, "--json"],
                 ["check", "extension", g, "--demand", "1,1,1", "--samples", 500, "--seed", 2, "--json"]):
        assert run(argv) == run(argv)

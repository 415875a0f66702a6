import json

import pytest

from lieindex.cli import main

NILP4_M = '[["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]'


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, doc, name="alg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_catalog_list_and_emit(capsys):
    code, out, _ = run(["catalog", "list"], capsys)
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert code == 0 and "nilp4" in names and "so3q" in names
    code, out, _ = run(["catalog", "emit", "nilp4", "--field", "gf3"], capsys)
    assert code == 0 and json.loads(out)["field"] == {"gf": 3}


def test_classify_nilp4(tmp_path, capsys):
    _, doc, _ = run(["catalog", "emit", "nilp4", "--field", "gf3"], capsys)
    path = write(tmp_path, json.loads(doc))
    code, out, _ = run(["classify", path], capsys)
    flags = json.loads(out)["results"]["flags"]
    assert code == 0
    assert flags == {
        "abelian": False,
        "nilpotent": True,
        "solvable": True,
        "completely_solvable": True,
        "supersolvable": "yes",
    }


def test_classify_so3q(capsys):
    code, out, _ = run(["classify", "catalog:so3q"], capsys)
    res = json.loads(out)["results"]
    assert code == 0
    assert not any(v for k, v in res["flags"].items() if k != "supersolvable")
    assert res["flags"]["supersolvable"] == "no" and res["radical"] == []


def test_classify_bad_documents(tmp_path, capsys):
    dup = {
        "field": "Q",
        "dim": 2,
        "basis": ["x", "y"],
        "brackets": [{"left": "x", "right": "y", "value": {"y": "1"}}] * 2,
    }
    code, _, err = run(["classify", write(tmp_path, dup)], capsys)
    assert code == 2 and "twice" in err
    bad = {
        "field": "Q",
        "dim": 3,
        "basis": ["x", "y", "z"],
        "brackets": [
            {"left": "x", "right": "y", "value": {"x": "1"}},
            {"left": "y", "right": "z", "value": {"x": "1"}},
            {"left": "x", "right": "z", "value": {"y": "1"}},
        ],
    }
    code, _, err = run(["classify", write(tmp_path, bad)], capsys)
    assert code == 2 and "(x, y, z)" in err
    (tmp_path / "junk.json").write_text("{not json")
    assert run(["classify", str(tmp_path / "junk.json")], capsys)[0] == 2
    assert run(["classify", str(tmp_path / "missing.json")], capsys)[0] == 2


def test_classify_partial_report_exit_3(capsys):
    code, out, _ = run(["classify", "catalog:affine2_sl2", "--field", "gf5"], capsys)
    res = json.loads(out)["results"]
    assert code == 3 and "nilradical" in res["skipped"] and json.loads(out)["summary"]["status"] == "partial"
    code, out, _ = run(["classify", "catalog:affine2_sl2", "--field", "gf5", "--bounds", "5=5"], capsys)
    assert code == 0 and len(json.loads(out)["results"]["radical"]) == 2


def test_index_complex_nilp4(capsys):
    code, out, _ = run(["index-complex", "catalog:nilp4", "--field", "gf3", "--maximal", NILP4_M], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and res["eta"] == 1
    by_space = {json.dumps(r["space"]): r for r in res["records"]}
    c1 = by_space[json.dumps([["1", "0", "0", "0"]])]
    c2 = by_space[json.dumps([["1", "0", "0", "0"], ["0", "0", "1", "0"]])]
    assert (c1["quotient_dim"], c2["quotient_dim"]) == (1, 2)
    assert "subideal completion" in c1["labels"] and "subideal completion" in c2["labels"]


def test_index_complex_opening_example(capsys):
    code, out, _ = run(["index-complex", "catalog:affine2", "--field", "gf3", "--maximal", '[["1","1"]]'], capsys)
    res = json.loads(out)["results"]
    x = next(r for r in res["records"] if r["space"] == [["1", "0"]])
    assert code == 0 and res["eta"] == 1
    assert "maximal completion" in x["labels"] and "ideal completion" not in x["labels"]
    code, out, _ = run(["index-complex", "catalog:affine2", "--field", "gf3", "--maximal", '[["1","1"]]', "--eta-only"], capsys)
    assert json.loads(out)["results"] == {"eta": 1, "is_maximal": "yes", "maximal": [["1", "1"]]}


def test_index_complex_rational_targeted(capsys):
    diag = '[["1","0","0","1","0","0"],["0","1","0","0","1","0"],["0","0","1","0","0","1"]]'
    code, out, _ = run(["index-complex", "catalog:ex31", "--maximal", diag], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and res["has_abelian_ideal_completion"] is False and res["eta"] == 3


def test_index_complex_errors(capsys):
    assert run(["index-complex", "catalog:nilp4", "--field", "gf3", "--maximal", '[["0","1","0","0"],["0","0","1","0"]]'], capsys)[0] == 2
    assert run(["index-complex", "catalog:nilp4", "--field", "gf3", "--maximal", '[["0","0","0","1"]]'], capsys)[0] == 2
    assert run(["index-complex", "catalog:nilp4", "--field", "gf3", "--maximal", "nope"], capsys)[0] == 2
    # heisenberg3 over Q: maximality of a codim-1 plane is known but its ideal lattice is not
    assert run(["index-complex", "catalog:heisenberg3", "--field", "Q", "--maximal", '[["1","0","0"],["0","0","1"]]'], capsys)[0] == 3


def test_verify_random_selected_checks(capsys):
    argv = ["verify", "--corpus", "random", "--dim", "4", "--field", "gf2", "--seed", "7", "--count", "20",
            "--checks", "cor_2_7,cor_2_9"]
    code, out, _ = run(argv, capsys)
    payload = json.loads(out)
    assert code == 0 and payload["summary"]["fail"] == 0 and payload["summary"]["pass"] == 40


def test_verify_catalog_single_check(capsys):
    code, out, _ = run(["verify", "--corpus", "catalog", "--checks", "thm_2_12"], capsys)
    ents = json.loads(out)["results"]["entries"]
    assert code == 0 and ents and all(e["verdict"] == "pass" for e in ents)
    assert "affine2_sl2@GF(5)" in {e["algebra"] for e in ents}


def test_verify_exit_1_on_failure(capsys):
    code, out, _ = run(["verify", "--corpus", "catalog", "--field", "gf2", "--checks", "prop_4_5"], capsys)
    fails = [e for e in json.loads(out)["results"]["entries"] if e["verdict"] == "fail"]
    assert code == 1 and fails and all("witness" in e for e in fails)


def test_verify_bad_parameters(capsys):
    assert run(["verify", "--checks", "nonsense"], capsys)[0] == 2
    assert run(["verify", "--corpus", "random", "--field", "Q"], capsys)[0] == 2
    assert run(["verify", "--corpus", "random", "--dim", "9"], capsys)[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--corpus", "nowhere"])
    assert info.value.code == 2


def test_verify_output_file_is_byte_identical(tmp_path, capsys):
    argv = ["verify", "--corpus", "random", "--dim", "3", "--field", "gf3", "--seed", "5", "--count", "8"]
    target = tmp_path / "report.json"
    run(argv + ["-o", str(target)], capsys)
    first = target.read_bytes()
    run(argv + ["-o", str(target)], capsys)
    assert target.read_bytes() == first
    assert run(argv, capsys)[1] == run(argv, capsys)[1]

import json

import pytest

from chevk1.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_diagram_json(capsys):
    code, out, _ = run(capsys, "diagram", "--rep", "E6:w1", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["nodes"]) == 27


def test_diagram_dot(capsys):
    code, out, _ = run(capsys, "diagram", "--rep", "D5:w1", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--system", "E7")
    assert len(json.loads(out)["roots"]) == 126
    code, out, _ = run(capsys, "roots", "--system", "A1+D6@E7")
    data = json.loads(out)
    assert len(data["roots"]) == 62 and len(data["complement"]) == 64


def test_reduce_unit_vector_gives_empty_word(capsys, tmp_path):
    v = tmp_path / "v.json"
    v.write_text(json.dumps([1] + [0] * 26))
    code, out, _ = run(capsys, "reduce", "--rep", "E6:w1", "--ring", "Z/360", "--in", str(v))
    assert code == 0 and json.loads(out)["word"] == []


def test_reduce_then_replay(capsys, tmp_path):
    w = tmp_path / "w.json"
    code, _, _ = run(capsys, "--seed", "4", "reduce", "--rep", "E6:w1", "--ring", "Z",
                     "--random", "--trace", "--out", str(w))
    assert code == 0
    data = json.loads(w.read_text())
    assert [t["step"] for t in data["trace"]] == [1, 2, 3, 4]
    v = tmp_path / "v.json"
    v.write_text(json.dumps(data["input"]))
    code, out, _ = run(capsys, "elem", "--in", str(w), "--vector", str(v))
    assert code == 0 and json.loads(out)["vector"][0] == "1"


def test_outputs_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "--seed", "9", "reduce", "--rep", "D5:w1", "--ring", "Z/360", "--random",
            "--minimize", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_decompose_and_replay(capsys, tmp_path):
    s = tmp_path / "s.json"
    code, _, _ = run(capsys, "--seed", "2", "decompose", "--rep", "E6:w1", "--ring", "Z/6",
                     "--random", "--out", str(s))
    assert code == 0
    data = json.loads(s.read_text())
    for key in ("v_word", "u_word"):
        code, out, _ = run(capsys, "elem", "--in", str(s), "--key", key)
        assert code == 0
        assert json.loads(out)["matrix"] == data[key[0]]


def test_decompose_from_word(capsys, tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"rep": "E6:w1", "ring": "Z",
                             "word": [{"kind": "x", "root": [-1, 0, 0, 0, 0, 0], "scalar": "3"}]}))
    code, out, _ = run(capsys, "decompose", "--pivot", "1", "--in", str(g))
    assert code == 0
    assert len(json.loads(out)["v_word"]) == 1


def test_conjugate_and_replay(capsys, tmp_path):
    c = tmp_path / "c.json"
    code, _, _ = run(capsys, "conjugate", "--source=-1,-2,-3,-4,-3,-2,-1", "--out", str(c))
    assert code == 0
    code, out, _ = run(capsys, "elem", "--in", str(c))
    assert code == 0


def test_verify_identity_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper")
    assert code == 0
    reports = json.loads(out)
    assert {r["check"] for r in reports} >= {"z-factorization", "h_delta-product",
                                             "weyl-transitivity", "z-certificates"}
    assert all(r["status"] == "pass" and "elapsed" in r for r in reports)


def test_domain_error_exit_code(capsys, tmp_path):
    v = tmp_path / "v.json"
    v.write_text(json.dumps([2] * 27))
    code, _, err = run(capsys, "reduce", "--rep", "E6:w1", "--ring", "Z", "--in", str(v))
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "NotUnimodular"
    code, _, err = run(capsys, "conjugate", "--source", "0,1,0,0,0,0,0")
    assert code == 1 and json.loads(err)["error"]["kind"] == "NoSuchElement"


def test_usage_error_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "reduce", "--rep", "E6:w1", "--ring", "Q", "--random")
    assert code == 2 and "error" in json.loads(err)
    code, _, _ = run(capsys, "reduce", "--rep", "E6:w2", "--ring", "Z", "--random")
    assert code == 2
    code, _, _ = run(capsys, "reduce", "--rep", "E6:w1", "--ring", "Z")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2

import json

import polycrystal as pc
from polycrystal import oracle
from polycrystal.cli import main
from polycrystal.linforms import form_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_inequalities_rank2_text(capsys):
    code, out, err = run(capsys, "--family", "rank2:2,2", "--lambda", "1,1", "inequalities")
    assert code == 2  # infinite family, truncated window
    assert "lambda_1 >= x_1" in out.splitlines()
    assert "lambda_2 + 2x_1 - x_2 >= 0" in out
    assert "truncated" in err


def test_inequalities_finite_exit_zero(capsys):
    code, out, _ = run(capsys, "--family", "rank2:1,1", "--lambda", "1,1", "inequalities")
    assert code == 0
    assert "lambda_1 >= x_1" in out
    assert "x_k = 0 for k > 3" in out


def test_inequalities_an_json_zero_constants(capsys):
    code, out, _ = run(capsys, "--family", "an:3", "--lambda", "0,0,0", "inequalities", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["forms"] and all(f["const"] == 0 for f in payload["forms"])
    assert payload["truncated"] is False


def test_inequalities_affine_truncated(capsys):
    code, out, err = run(
        capsys, "--family", "affine-a:3", "--lambda", "1,0,0", "inequalities", "--rows", "4", "--format", "json"
    )
    assert code == 2
    assert json.loads(out)["truncated"] is True


def test_json_forms_roundtrip(capsys):
    _, out, _ = run(capsys, "--family", "an:2", "--lambda", "2,0", "inequalities", "--format", "json")
    payload = json.loads(out)
    fs = pc.an_system(2, pc.weight(pc.type_a(2), "2,0"))
    assert frozenset(form_from_json(d) for d in payload["forms"]) == fs.forms


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "--family", "rank2:1,1", "--lambda", "1,1", "enumerate")
    assert code == 0
    assert out.splitlines()[0] == "8 elements, complete"


def test_enumerate_affine_capped(capsys):
    code, out, _ = run(capsys, "--family", "rank2:2,2", "--lambda", "1,0", "enumerate", "--depth", "3")
    assert code == 2
    assert "cut at depth 3" in out


def test_enumerate_json_and_determinism(capsys):
    args = ("--family", "an:3", "--lambda", "1,0,0", "enumerate", "--format", "json")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    payload = json.loads(out1)
    assert payload["count"] == 4 and payload["complete"] is True
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_enumerate_json_roundtrips_into_lattice_points(capsys):
    c = pc.type_a(2)
    s = pc.standard_iota(c)
    lam = pc.weight(c, "1,1")
    _, out, _ = run(capsys, "--family", "an:2", "--lambda", "1,1", "enumerate", "--format", "json")
    payload = json.loads(out)
    parsed = {
        pc.LatticePoint.build(s, lam, {int(k): v for k, v in e["entries"].items()}).entries
        for e in payload["elements"]
    }
    result = pc.enumerate_blambda(s, lam, pc.an_system(2, lam))
    assert parsed == {p.entries for p in result.elements}
    weights = {tuple(int(v) for v in key.split(",")): n for key, n in payload["by_weight"].items()}
    assert weights == result.by_weight


def test_enumerate_dot(capsys):
    code, out, _ = run(capsys, "--family", "rank2:1,1", "--lambda", "1,0", "enumerate", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph crystal {") and '[label="1"]' in out


def test_mult(capsys):
    code, out, _ = run(capsys, "--family", "an:2", "--lambda", "1,1", "mult", "--m", "1,1")
    assert code == 0 and out.strip() == "2"


def test_lr(capsys):
    code, out, _ = run(capsys, "--family", "rank2:1,1", "--lambda", "1,0", "lr", "--mu", "1,0", "--nu", "0,1")
    assert code == 0 and out.strip() == "1"


def test_epsstar(capsys):
    code, out, _ = run(capsys, "--family", "rank2:1,1", "epsstar", "--x", "2,1", "--i", "1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "--family", "an:3", "epsstar", "--x", "1,1,1,0,1", "--i", "2")
    assert code == 0 and out.strip() == "0"


def test_epsstar_rejects_outside_point(capsys):
    code, _, err = run(capsys, "--family", "an:2", "epsstar", "--x", "0,0,1", "--i", "1")
    assert code == 1 and "error" in err


def test_check_positivity(capsys):
    code, out, _ = run(capsys, "--family", "an:3", "--iota", "2,3,2,1", "check-positivity")
    assert code == 0
    assert out.splitlines()[0] == "positivity: fail"
    assert "first-occurrence position 2" in out
    code, out, _ = run(capsys, "--family", "rank2:1,2", "check-positivity")
    assert code == 2  # clean verdict on a truncated window
    assert out.splitlines()[0].startswith("positivity: pass")


def test_check_ample(capsys):
    code, out, _ = run(capsys, "--family", "an:3", "--iota", "2,3,2,1", "--lambda", "0,1,0", "check-ample")
    assert code == 0 and out.startswith("ample: no")
    code, out, _ = run(capsys, "--family", "rank2:2,2", "--lambda", "1,1", "check-ample")
    assert code == 2 and out.startswith("ample: yes")


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "--family", "an:2", "verify", "--max-weight", "2")
    assert code == 0 and "all checks passed" in out


def test_verify_detects_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(oracle, "weyl_dim", lambda c, w: 999)
    code, out, _ = run(capsys, "--family", "an:2", "verify", "--max-weight", "1")
    assert code == 3 and out.startswith("mismatch:")


def test_custom_family_generic_pipeline(capsys, tmp_path):
    path = tmp_path / "cartan.json"
    path.write_text(json.dumps({"rank": 2, "matrix": [[2, -1], [-1, 2]], "symmetrizer": [1, 1]}))
    code, out, _ = run(
        capsys, "--family", f"custom:{path}", "--iota", "2,1", "--lambda", "1,0",
        "enumerate", "--support", "8",
    )
    assert code == 0 and out.splitlines()[0] == "3 elements, complete"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "--family", "rank2:1,1")
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "--family", "rank2:0,1", "--lambda", "1,0", "enumerate")
    assert code == 1
    code, _, err = run(capsys, "--family", "an:2", "--lambda", "1,1", "mult", "--m", "1")
    assert code == 1 and "entries" in err

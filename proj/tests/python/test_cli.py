"""End-to-end checks of the command-line interface.

The binary path comes from the GPROJ_CLI environment variable (set by ctest).
"""

import json
import os
import subprocess

import pytest

import gproj

CLI = os.environ.get("GPROJ_CLI", "./gproj")

KA2 = {
    "field": "Fp:101",
    "vertices": 2,
    "arrows": [{"id": "a", "from": 0, "to": 1}],
    "relations": [],
}
DUAL = {
    "field": "Fp:101",
    "vertices": 1,
    "arrows": [{"id": "x", "from": 0, "to": 0}],
    "relations": [[{"coeff": "1", "path": ["x", "x"]}]],
}


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stdout + proc.stderr
    return proc


@pytest.fixture()
def files(tmp_path):
    (tmp_path / "kA2.json").write_text(json.dumps(KA2))
    (tmp_path / "dual.json").write_text(json.dumps(DUAL))
    return tmp_path


def test_algebra_info(files):
    out = run("algebra-info", str(files / "dual.json")).stdout
    assert "dim 2" in out
    assert "self-injective: yes" in out
    out = run("algebra-info", str(files / "kA2.json")).stdout
    assert "dim 3" in out
    assert "global dimension: 1" in out
    assert "Gorenstein: yes (1, 1)" in out
    assert "self-injective: no" in out


def test_every_run_prints_version_field_and_caps(files):
    out = run("algebra-info", str(files / "kA2.json"), "--cap", "9").stdout
    assert out.splitlines()[0].startswith("gproj 0.")
    assert "field Fp:101" in out
    assert "bound 9" in out


def test_parse_error_names_the_bad_arrow(files):
    bad = dict(KA2, relations=[[{"coeff": "1", "path": ["zz", "a"]}]])
    (files / "bad.json").write_text(json.dumps(bad))
    proc = run("algebra-info", str(files / "bad.json"), expect=1)
    assert "zz" in proc.stderr


def test_unknown_flag_is_an_error(files):
    run("algebra-info", str(files / "kA2.json"), "--no-such-flag", expect=1)


def test_ext_table(files):
    a = gproj.family("kA2")
    (files / "s1.json").write_text(gproj.simple(a, 0).to_json(inline_algebra=False))
    (files / "s2.json").write_text(gproj.simple(a, 1).to_json(inline_algebra=False))
    out = run("ext", "--algebra", str(files / "kA2.json"), "--modules",
              str(files / "s1.json"), str(files / "s2.json"), "--max-degree", "3").stdout
    assert "Ext^0 = 0" in out
    assert "Ext^1 = 1" in out
    assert "Ext^2 = 0" in out
    assert "Ext^3 = 0" in out


def test_tor_table(files):
    a = gproj.family("kA2")
    db = gproj.dual(gproj.regular(a))  # right regular dual, lives over the opposite
    (files / "db.json").write_text(db.to_json(inline_algebra=False))
    (files / "free.json").write_text(gproj.regular(a).to_json(inline_algebra=False))
    proc = run("tor", "--algebra", str(files / "kA2.json"), "--modules",
               str(files / "db.json"), str(files / "free.json"),
               "--max-degree", "2", "--format", "structured")
    table = json.loads(proc.stdout)["tor"]
    assert table[1:] == [0, 0]  # free modules are flat
    assert table[0] == db.dim  # D(B) (x)_B B has the dimension of D(B)


def test_check_gp_and_exit_codes(files):
    t = gproj.tensor(gproj.family("dual_numbers"), gproj.family("kA2"))
    free = gproj.regular(t)
    (files / "free.json").write_text(free.to_json(inline_algebra=False))
    proc = run("check-gp", "--tensor", str(files / "dual.json"), str(files / "kA2.json"),
               "--module", str(files / "free.json"), "--criterion", "direct")
    assert "direct: yes" in proc.stdout

    # structured output parses back into a verdict
    proc = run("check-gp", "--tensor", str(files / "dual.json"), str(files / "kA2.json"),
               "--module", str(files / "free.json"), "--criterion", "thm3",
               "--format", "structured")
    v = json.loads(proc.stdout)
    assert v["outcome"] == "yes"
    assert v["criterion"] == "thm3"

    # hypothesis failure is its own exit code, distinct from a "no"
    run("check-gp", "--tensor", str(files / "dual.json"), str(files / "kA2.json"),
        "--module", str(files / "free.json"), "--criterion", "selfinj", expect=2)


def test_check_gp_witness(files):
    t = gproj.tensor(gproj.family("dual_numbers"), gproj.family("kA2"))
    x = gproj.module_from_json(
        json.dumps({
            "dim": 4,
            "actions": {
                "A.e0": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
                          ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
                "A.x": [["0", "0", "0", "0"], ["1", "0", "0", "0"],
                         ["0", "0", "0", "0"], ["0", "0", "1", "0"]],
                "B.e0": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
                          ["0", "0", "0", "0"], ["0", "0", "0", "0"]],
                "B.e1": [["0", "0", "0", "0"], ["0", "0", "0", "0"],
                          ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
                "B.a": [["0", "0", "0", "0"], ["0", "0", "0", "0"],
                         ["0", "0", "0", "0"], ["1", "0", "0", "0"]],
            },
        }),
        t,
    )
    (files / "xy.json").write_text(x.to_json(inline_algebra=False))
    proc = run("check-gp", "--tensor", str(files / "dual.json"), str(files / "kA2.json"),
               "--module", str(files / "xy.json"), "--criterion", "propB")
    assert "propB: no" in proc.stdout
    assert "restriction to B is not projective" in proc.stdout


def test_emit_algebra(files):
    t = gproj.tensor(gproj.family("dual_numbers"), gproj.family("kA2"))
    (files / "free.json").write_text(gproj.regular(t).to_json(inline_algebra=False))
    run("check-gp", "--tensor", str(files / "dual.json"), str(files / "kA2.json"),
        "--module", str(files / "free.json"), "--criterion", "direct",
        "--emit-algebra", str(files / "emitted.json"))
    desc = json.loads((files / "emitted.json").read_text())
    assert desc["generators"] == ["A.e0", "A.x", "B.e0", "B.e1", "B.a"]
    assert desc["dim"] == 6


def test_verify_cli(files, tmp_path):
    out = tmp_path / "report.json"
    proc = run("verify", "--theorem", "cor35", "--samples", "15", "--seed", "4",
               "--out", str(out), "--format", "structured")
    rep = json.loads(proc.stdout)
    assert rep["totals"] == {"agree": 15, "disagree": 0, "inconclusive": 0}
    assert json.loads(out.read_text()) == rep

    # hypothesis failure aborts with exit 2 and no report
    run("verify", "--theorem", "cor35", "--family", "kA2", "--family", "kA2",
        "--samples", "2", expect=2)

    # unknown theorem name is a usage error
    run("verify", "--theorem", "nope", expect=1)

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from gradedq.cli import main

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def test_groebner_i2_golden():
    code, out, _ = run("groebner", DATA / "i2.json")
    assert code == 0
    assert out == (GOLDEN / "groebner_i2.txt").read_text(encoding="utf-8")
    assert "LT ideal: (n*t, h^3, m*h, m^2)" in out


def test_groebner_principal(tmp_path):
    f = tmp_path / "x.json"
    f.write_text(json.dumps({"ring": {"vars": [{"name": "x", "degree": 1}]}, "generators": ["x"]}))
    code, out, _ = run("groebner", f, "--json", "-")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == ["x"] and data["leading_terms"] == "(x)"


def test_groebner_order_flag():
    code, out, _ = run("groebner", DATA / "i2.json", "--order", "grevlex")
    assert code == 0 and out.startswith("order: grevlex")
    code, _, err = run("groebner", DATA / "i2.json", "--order", "lex:m,h,q,t")
    assert code == 2 and "bad --order" in err


@pytest.mark.parametrize("content", ["{bad", "[]", '{"generators": ["m"]}',
                                     '{"ring": {"vars": [{"name": "m", "degree": 2}]}, '
                                     '"generators": ["m^"]}'])
def test_malformed_files_exit_2(tmp_path, content):
    f = tmp_path / "bad.json"
    f.write_text(content)
    code, out, err = run("groebner", f)
    assert code == 2 and err.startswith("error:") and out == ""


def test_missing_file_exit_2(tmp_path):
    assert run("hilbert", tmp_path / "nope.json")[0] == 2


def test_hilbert_tables(tmp_path):
    code, out, _ = run("hilbert", DATA / "i2.json", "--max-degree", 12, "--json", "-")
    assert code == 0
    assert json.loads(out) == {"bound": 12, "dims": {"0": 1, "2": 4, "4": 7, "6": 8, "8": 8,
                                                      "10": 8, "12": 8}}
    _, out1, _ = run("hilbert", DATA / "i1.json", "--max-degree", 12, "--json", "-")
    assert out1 == out
    f = tmp_path / "e.json"
    f.write_text(json.dumps({"ring": {"vars": [{"name": "e", "degree": 2}]}, "generators": []}))
    _, out, _ = run("hilbert", f, "--max-degree", 6)
    assert [line.split()[1] for line in out.splitlines()[1:8]] == ["1", "0", "1", "0", "1", "0", "1"]


def test_hilbert_non_homogeneous_exit_3(tmp_path):
    f = tmp_path / "nh.json"
    f.write_text(json.dumps({"ring": {"vars": [{"name": "x", "degree": 1}]}, "generators": ["x^2+x"]}))
    code, _, err = run("hilbert", f)
    assert code == 3 and "precondition" in err


def test_invariants_cmd(tmp_path):
    code, out, _ = run("invariants", DATA / "i2.json", DATA / "c2xc2.json", "--max-degree", 8)
    assert code == 0
    assert "dim (R/I)^G : 1,0,0,0,3,0,0,0,4" in out
    trivial = tmp_path / "trivial.json"
    trivial.write_text(json.dumps({"generators": []}))
    _, out, _ = run("invariants", DATA / "i2.json", trivial, "--max-degree", 8, "--json", "-")
    data = json.loads(out)
    assert data["group_order"] == 1
    assert data["fixed_quotient"]["dims"] == {"0": 1, "2": 4, "4": 7, "6": 8, "8": 8}


def test_invariants_unstable_exit_3(tmp_path):
    f = tmp_path / "unstable.json"
    f.write_text(json.dumps({"ring": {"vars": [{"name": v, "degree": 2} for v in "mhnt"]},
                             "generators": ["m+n"]}))
    code, _, err = run("invariants", f, DATA / "c2xc2.json", "--max-degree", 4)
    assert code == 3 and "outside the ideal" in err


def test_ss_builtins():
    code, out, _ = run("ss", "disc-over-bso4", "--json", "-")
    assert code == 0
    assert json.loads(out)["totals"] == {"bound": 40, "dims": {"0": 1}}
    code, out, _ = run("ss", "main", "--max-degree", 12)
    assert out == (GOLDEN / "ss_main_12.txt").read_text(encoding="utf-8")
    code, out, _ = run("ss", "point-over-torus", "--json", "-")
    dims = json.loads(out)["totals"]["dims"]
    assert dims == {str(d): (1 if d == 0 else 2) for d in range(0, 41, 2)}


def test_ss_from_file():
    code, out, _ = run("ss", DATA / "disc-over-torus.json", "--json", "-")
    assert code == 0
    assert json.loads(out)["e_infinity"] == {"0,0": 1, "2,0": 2, "4,0": 1}


def test_ss_refuses_small_window():
    code, _, err = run("ss", "main", "--max-degree", 3)
    assert code == 4 and err.startswith("refused")


def test_ss_unknown_scenario():
    assert run("ss", "no-such-thing")[0] == 2


def test_charrings_cmds():
    code, out, _ = run("charrings", "list")
    assert code == 0 and len(out.splitlines()) == 12
    code, out, _ = run("charrings", "apply", "--map", "i_star", "--poly", "p1^2")
    assert out == "i_star(p1^2) = e1^4 + 2*e1^2*e2^2 + e2^4\n"
    assert run("charrings", "apply", "--map", "zz", "--poly", "p1")[0] == 2
    assert run("charrings", "apply", "--map", "i_star", "--poly", "p1^")[0] == 2


def test_verify_golden_and_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1, out1, _ = run("verify", "paper", "--json", a)
    code2, out2, _ = run("verify", "paper", "--json", b)
    assert code1 == code2 == 0
    assert out1 == out2
    assert a.read_bytes() == b.read_bytes()
    assert out1 == (GOLDEN / "verify_paper.txt").read_text(encoding="utf-8")
    assert a.read_bytes() == (GOLDEN / "verify_paper.json").read_bytes()
    report = json.loads(a.read_text(encoding="utf-8"))
    assert report["summary"]["fail"] == 0
    assert all(c["anchor"] for c in report["checks"])


def test_verify_small_window_refuses(tmp_path):
    out_json = tmp_path / "v.json"
    code, out, _ = run("verify", "paper", "--max-degree", 4, "--json", out_json)
    assert code == 4
    report = json.loads(out_json.read_text(encoding="utf-8"))
    assert report["summary"]["refused"] == 4 and report["summary"]["fail"] == 0
    assert "REFUSED" in out


def test_verify_timings_flag():
    code, out, _ = run("verify", "paper", "--max-degree", 12, "--timings")
    assert code == 0 and "s]" in out


def test_verify_failure_exit_1(monkeypatch):
    import gradedq.verify as v
    monkeypatch.setattr(v, "main_table", lambda bound: v.point_table(bound))
    code, out, _ = run("verify", "paper", "--max-degree", 12)
    assert code == 1 and "FAIL" in out


def test_usage_error_exit_2():
    assert run("frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gradedq", "groebner", str(DATA / "i1.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "LT ideal: (n*t, h^3, m*h, m^2)" in proc.stdout

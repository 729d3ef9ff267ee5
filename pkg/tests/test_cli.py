from __future__ import annotations

import json
import subprocess
import sys

import pytest

from artin_dn.cli import main, parse_range
from artin_dn.coxeter import CoxType
from artin_dn.garside import delta_square_product_sides, explicit_delta_word
from artin_dn.homs import dump_hom, load_hom, make_beta, make_chi, make_pi, make_zeta
from artin_dn.words import format_word


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_golden(capsys):
    assert run(capsys, "nf", "A2", "s1 s2 s1") == (0, "D^1 | \n", "")
    assert run(capsys, "nf", "D4", "t1 t1^-1") == (0, "D^0 | \n", "")
    squared = format_word(explicit_delta_word(CoxType.D(5)) ** 2)
    assert run(capsys, "nf", "D5", squared) == (0, "D^2 | \n", "")
    assert run(capsys, "nf", "--group", "D5", "t1 t2 t1") == (0, "D^0 | t1 t2 t1\n", "")


def test_equal_exit_codes(capsys):
    lhs, rhs = delta_square_product_sides(4)
    assert run(capsys, "equal", "A4", format_word(lhs), format_word(rhs))[:2] == (0, "equal\n")
    assert run(capsys, "equal", "D5", "t4", "t5")[:2] == (1, "distinct\n")
    assert run(capsys, "equal", "D5", "t1 t4^-1", "t1 t4^-1")[:2] == (0, "equal\n")


@pytest.mark.parametrize(
    "argv, token",
    [
        (("nf", "D5", "t1 x2"), "x2"),
        (("nf", "D5", "t1 t6"), "t6"),
        (("nf", "D3", "t1"), "D3"),
        (("nf", "Q5", "t1"), "Q5"),
        (("equal", "A3", "s1", "t1"), "t1"),
        (("--max-len", "5", "nf", "A3", "s1 s2^10"), "s2^10"),
    ],
)
def test_input_errors_name_the_token(capsys, argv, token):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert token in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "nf")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "nf", "D5", "t1", "t2")[0] == 2


def test_apply_and_verify(tmp_path, capsys):
    f = tmp_path / "pi.json"
    f.write_text(dump_hom(make_pi(5)))
    assert run(capsys, "apply", str(f), "t4 t5^-1") == (0, "s4 s4^-1\n", "")
    assert run(capsys, "apply", str(f), "t4 t5^-1", "--reduce") == (0, "\n", "")
    assert run(capsys, "apply", str(f), "t1 t4", "--nf") == (0, "s1 s4\nD^0 | s1 s4\n", "")
    assert run(capsys, "verify", str(f)) == (0, "pass\n", "")
    assert run(capsys, "apply", str(f), "s1")[0] == 2

    g = tmp_path / "beta.json"
    g.write_text(dump_hom(make_beta(6, 1, -1)))
    assert run(capsys, "verify", str(g)) == (0, "pass\n", "")

    broken = json.loads(dump_hom(make_pi(6)))
    broken["images"][-1] = "s1"
    b = tmp_path / "broken.json"
    b.write_text(json.dumps(broken))
    code, out, _ = run(capsys, "verify", str(b))
    assert code == 1
    assert out.splitlines()[-1] == "fail"
    assert "t4, t6" in out


def test_malformed_files_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", str(bad))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2
    bad.write_text('{"source": "D4", "target": "D4", "images": ["t1", "t2", "t3", "t7"]}')
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2 and "t7" in err


def test_lift_outputs(tmp_path, capsys):
    f = tmp_path / "chi.json"
    f.write_text(dump_hom(make_chi(5)))
    code, out, err = run(capsys, "lift", str(f))
    assert code == 0
    assert load_hom(out) == make_chi(5)
    assert err == "corrections: 0 0 0 0 0\n"

    cand = json.loads(dump_hom(make_zeta(4)))
    cand["images"][1] = "t2 t1"
    f.write_text(json.dumps(cand))
    code, out, err = run(capsys, "lift", str(f))
    assert code == 3 and out == ""
    assert "t1, t2" in err

    f.write_text(dump_hom(make_pi(5)))
    assert run(capsys, "lift", str(f))[0] == 2


def test_parse_range():
    assert parse_range("-2..2") == [-2, -1, 0, 1, 2]
    assert parse_range("0") == [0]
    with pytest.raises(Exception):
        parse_range("2..1")


def test_sweep_report_is_deterministic(capsys):
    argv = ["sweep", "4", "5", "-1..1", "-1..0", "--samples", "5", "--rewrites", "10"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "all families pass"
    assert len(lines) == 11 and all(line.startswith("PASS ") for line in lines[:-1])
    code, out_json, _ = run(capsys, *argv, "--json")
    doc = json.loads(out_json)
    assert doc["ok"] and doc["p_values"] == [-1, 0, 1] and doc["q_values"] == [-1, 0]
    assert [f["family"] for f in doc["families"]][0] == "garside"
    assert run(capsys, *argv, "--jobs", "2")[2] == "" and main(argv) == 0
    again = capsys.readouterr().out
    assert again == out


def test_sweep_input_errors(capsys):
    assert run(capsys, "sweep", "3", "5", "0..0", "0..0")[0] == 2
    assert run(capsys, "sweep", "4", "5", "x", "0..0")[0] == 2
    assert run(capsys, "sweep", "4", "4", "0..0", "0..0", "--families", "nope")[0] == 2


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "artin_dn.cli", "equal", "D5", "t4", "t5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 1 and proc.stdout == "distinct\n"

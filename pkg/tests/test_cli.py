from __future__ import annotations

import subprocess
import sys

import pytest

from wchrom import reference as ref
from wchrom.cli import main, parse_fix, parse_sweep
from wchrom.strips import format_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_family(capsys):
    code, out, _ = run(capsys, "compute", "--family", "C:3")
    assert code == 0
    assert out == "q^3 + 3*q^2*w - 6*q^2 - 9*q*w + 11*q + 6*w - 6\n"


def test_compute_graph_file_and_vars(tmp_path, capsys):
    f = tmp_path / "tri.txt"
    f.write_text("n 3\n0 1\n1 2\n0 2\n")
    assert run(capsys, "compute", "--graph", str(f), "--vars", "q")[1] == "q^3 - 3*q^2 + 2*q\n"
    assert run(capsys, "compute", "--graph", str(f), "--vars", "x,y")[1] == "x^2 + x + y\n"
    out = run(capsys, "compute", "--graph", str(f), "--fix", "w=1,q=3")[1]
    assert out == "6\n"


def test_compute_writes_out_file(tmp_path, capsys):
    out = tmp_path / "p.txt"
    assert run(capsys, "compute", "--family", "L:2", "--out", str(out))[0] == 0
    assert out.read_text() == "q^2 + 2*q*w - 3*q - 2*w + 2\n"


def test_oracle(capsys):
    assert run(capsys, "oracle", "--family", "C:4", "--q", "2", "--v", "-1", "--w", "3")[1] == "18\n"


@pytest.mark.parametrize("which", sorted(ref.TABLES))
def test_tables_byte_identical(capsys, which):
    code, out, err = run(capsys, "tables", "--which", which, "--max", "8")
    assert code == 0
    assert out == format_table(ref.TABLES[which][0])
    assert "identical" in err


def test_family_verdict(capsys):
    code, out, _ = run(capsys, "family", "--family", "Wh:6")
    assert code == 0 and out.endswith("verdict: match\n")
    code, out, _ = run(capsys, "family", "--family", "sqcyc:2x3")
    assert code == 0


def test_zeros_csv(capsys):
    code, out, _ = run(capsys, "zeros", "--family", "L:3", "--fix", "w=1/2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "param,root_re,root_im,mult,residual"
    assert lines[1].startswith("1/2,1,0,1,")
    assert len(lines) == 4


def test_zeros_sweep_notes_degenerate_slice(capsys):
    code, out, err = run(capsys, "zeros", "--family", "L:3", "--sweep", "0:2:3", "--param", "q")
    assert code == 0 and "identically zero" in err
    assert {line.split(",")[0] for line in out.splitlines()[1:]} == {"0", "2"}


def test_locus(tmp_path, capsys):
    grid = tmp_path / "g.csv"
    code, out, _ = run(capsys, "locus", "--family", "circuit", "--fix", "0.5",
                       "--resolution", "60", "--out", str(grid))
    assert code == 0
    assert "q_c=2.33333333333333" in out.splitlines()
    assert grid.read_text().splitlines()[0] == "re,im,dominant_index,margin,flagged"
    assert len(grid.read_text().splitlines()) == 60 * 60 + 1


def test_check_subset(capsys):
    code, out, _ = run(capsys, "check", "--criteria", "3,5")
    assert code == 0 and out.splitlines()[-1] == "summary: 2/2 criteria passed"


def test_exit_codes(capsys):
    assert run(capsys, "compute", "--family", "K:9", "--cap", "10")[0] == 3
    assert run(capsys, "compute", "--family", "Q:3")[0] == 2
    assert run(capsys, "compute", "--family", "C:3", "--vars", "a,b")[0] == 2
    assert run(capsys, "check", "--criteria", "99")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_cap_from_environment():
    r = subprocess.run([sys.executable, "-m", "wchrom", "compute", "--family", "C:5"],
                       capture_output=True, text=True, env={"WCHROM_CAP": "3", "PATH": ""})
    assert r.returncode == 3 and "cap of 3" in r.stderr


def test_deterministic_output(capsys):
    a = run(capsys, "zeros", "--family", "C:5", "--fix", "w=3/4", "--threads", "1")[1]
    b = run(capsys, "zeros", "--family", "C:5", "--fix", "w=3/4", "--threads", "4")[1]
    assert a == b


def test_argument_helpers():
    assert parse_fix("w=1/2, q=3") == {"w": parse_fix("w=0.5")["w"], "q": 3}
    assert parse_sweep("0:1:3")[1] == parse_fix("x=1/2")["x"]
    with pytest.raises(ValueError):
        parse_fix("w")
    with pytest.raises(ValueError):
        parse_sweep("0:1")

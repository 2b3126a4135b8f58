import json

import pytest

from turanshift.cli import main
from turanshift.core import b_family
from turanshift.formats import format_family, read_family, write_family

from conftest import C5, G1, G2


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    write_family(C5, path)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_shift_lex_and_revlex(capsys, c5_file):
    code, out, _ = run(capsys, "shift", c5_file, "--order", "lex")
    assert code == 0
    assert "# shifted: true" in out and "# fixed-point: false" in out
    assert out.split("\n", 4)[-1] == format_family(G1)
    code, out, _ = run(capsys, "shift", c5_file, "--order", "revlex")
    assert out.split("\n", 4)[-1] == format_family(G2)


def test_shift_fixed_point(capsys, tmp_path):
    path = tmp_path / "b6.txt"
    write_family(b_family(6), path)
    code, out, _ = run(capsys, "shift", path, "--order", "sumlex")
    assert code == 0 and "# fixed-point: true" in out


def test_gen_round_trip_is_byte_identical(capsys, tmp_path):
    out_path = tmp_path / "t.txt"
    assert run(capsys, "gen", "turan34", "--n", 7, "--out", out_path)[0] == 0
    text = out_path.read_text()
    again = tmp_path / "again.txt"
    write_family(read_family(out_path), again)
    assert again.read_text() == text
    code, out, _ = run(capsys, "gen", "c", "--n", 6)
    assert code == 0 and out.startswith("n=6 k=3\n1 2 3\n")


def test_dominate_and_weakiso(capsys, c5_file, tmp_path):
    g1 = tmp_path / "g1.txt"
    write_family(G1, g1)
    code, out, _ = run(capsys, "dominate", c5_file, g1)
    assert code == 0 and json.loads(out)["outcome"] == "CertifiedYes"
    code, out, _ = run(capsys, "weakiso", c5_file, g1, "--seed", 4)
    assert json.loads(out)["weakly_isomorphic"] is True


def test_rankr_and_homology(capsys, c5_file):
    code, out, _ = run(capsys, "rankr", c5_file, 1)
    assert code == 0 and json.loads(out)["rank"] == 4
    code, out, _ = run(capsys, "homology", c5_file)
    assert json.loads(out)["reduced_betti"] == {"0": 0, "1": 1}


@pytest.mark.parametrize("argv", [
    ["shift", "missing.txt"],
    ["gen", "b"],
    ["verify"],
    ["verify", "no-such-campaign"],
    ["verify", "identities", "--max-exhaustive-n", "9"],
    ["rankr", "FILE", "0"],
    ["shift", "FILE", "--prime", "101"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, c5_file, argv):
    argv = [str(c5_file) if a == "FILE" else a for a in argv]
    assert main(argv) == 2


def test_malformed_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n=3 k=2\n2 1\n")
    code, _, err = run(capsys, "shift", bad)
    assert code == 2 and "line 2" in err


def test_verify_is_deterministic_apart_from_wall_time(capsys, tmp_path):
    reports = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        assert run(capsys, "verify", "c5-golden", "--seed", 7, "--out", path)[0] == 0
        report = json.loads(path.read_text())
        report.pop("wall_time_s")
        reports.append(report)
    assert reports[0] == reports[1]
    assert reports[0]["schema"] == 1 and reports[0]["pass"] is True

"""Command line behavior: output, exit codes, determinism."""

import json

import pytest

from ringcodes.cli import main
from ringcodes.codefiles import load_code, save_code
from ringcodes.linalg import Code
from ringcodes.rings import ring


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_ring_info(capsys):
    rc, out, _ = run(capsys, "ring-info", "U:3")
    assert rc == 0
    assert "omega = 8" in out and "(1, 3, 3, 1)" in out and "|R| = 256" in out


def test_ring_info_json(capsys):
    rc, out, _ = run(capsys, "--format", "json", "ring-info", "Z:2^2")
    assert rc == 0
    doc = json.loads(out)
    assert doc["version"] == "1" and doc["omega"] == 2


def test_factor_and_intersect_worked_example(capsys):
    rc, out, _ = run(
        capsys, "constacyclic", "factor", "--ring", "Z:2^2", "--n", "7",
        "--lambda", "-1",
    )
    assert rc == 0
    assert "[0] x+1" in out
    assert "[1] x^3+2x^2+x+1" in out
    assert "[2] x^3+x^2+2x+1" in out

    rc, out, _ = run(
        capsys, "constacyclic", "intersect", "--ring", "Z:2^2", "--n", "7",
        "--lambda", "-1", "--c1", "D0=1,2;D1=2", "--c2", "D0=0,2;D1=0",
    )
    assert rc == 0
    assert "2*(x+1)*(x^3+x^2+2x+1)" in out
    assert "ell = 3" in out


def test_code_file_roundtrip(tmp_path, capsys):
    z4 = ring("Z:2^2")
    code = Code(z4, 2, [(1, 2)])
    path = tmp_path / "c.json"
    save_code(path, code)
    assert load_code(path).same_elements(code)

    rc, out, _ = run(capsys, "code", "info", str(path))
    assert rc == 0 and "|C| = 4" in out and "free = True" in out

    out_path = tmp_path / "dual.json"
    rc, out, _ = run(capsys, "code", "dual", str(path), "--out", str(out_path))
    assert rc == 0
    d = load_code(out_path)
    assert d.size * code.size == z4.size**2


def test_dlip_report(tmp_path, capsys):
    r3 = ring("U:3")
    c1 = Code(r3, 1, [(r3.monomial([2]),), (r3.monomial([3]),)])
    c2 = Code(r3, 1, [(r3.monomial([1]),), (r3.monomial([3]),)])
    p1, p2 = tmp_path / "c1.json", tmp_path / "c2.json"
    save_code(p1, c1)
    save_code(p2, c2)
    rc, out, _ = run(capsys, "dlip", str(p1), str(p2))
    assert rc == 0
    assert "ell = dim(C1 and C2) = 5" in out
    assert "rank H2 G1^T = 1" in out

    rc, out, _ = run(capsys, "--format", "json", "dlip", str(p1), str(p2))
    doc = json.loads(out)
    assert doc["ell"] == 5 and doc["dims"] == [6, 6]


def test_gray_and_eaqec(tmp_path, capsys):
    f5g = ring("Fgamma:5^2")
    g = f5g.gamma
    code = Code(f5g, 3, [(g, g, g)])
    path = tmp_path / "g.json"
    save_code(path, code)
    rc, out, _ = run(capsys, "gray", str(path))
    assert rc == 0 and "min gray weight = 6" in out

    rc, out, _ = run(
        capsys, "eaqec", "--ring", "Fgamma:5^2", "--n", "4", "--lambda", "1",
        "--c1", "D0=0;D1=-", "--c2", "D0=1,2;D1=1",
    )
    assert rc == 0 and "eaqec = [[8," in out


def test_verify_subcommand(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "rings", "--seed", "7")
    assert rc == 0
    assert "ok   ring-metadata" in out
    assert "3/3 checks passed" in out

    rc, _, err = run(capsys, "verify", "--suite", "bogus")
    assert rc == 2 and "unknown suite" in err


def test_census_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for out_dir in (a, b):
        rc, _, _ = run(
            capsys, "census", "--ring", "Z:2^2", "--n", "3", "--lambda", "1",
            "--out", str(out_dir), "--no-plot",
        )
        assert rc == 0
    assert (a / "census.csv").read_bytes() == (b / "census.csv").read_bytes()
    assert (a / "census.json").read_bytes() == (b / "census.json").read_bytes()
    doc = json.loads((a / "census.json").read_text())
    assert doc["version"] == "1"


def test_census_plots(tmp_path, capsys):
    rc, _, _ = run(
        capsys, "census", "--ring", "Fgamma:5^2", "--n", "3", "--lambda", "1",
        "--out", str(tmp_path / "cc"),
    )
    assert rc == 0
    assert (tmp_path / "cc" / "census_ell.png").exists()
    assert (tmp_path / "cc" / "census_eaqec.png").exists()


def test_code_info_crt_ring(tmp_path, capsys):
    z6 = ring("CRT(F:2,F:3)")
    code = Code(z6, 2, [(z6.from_int(3), z6.from_int(2))])
    path = tmp_path / "crt.json"
    save_code(path, code)
    rc, out, _ = run(capsys, "code", "info", str(path))
    assert rc == 0 and "dim = [(2," in out


def test_census_check_mode(tmp_path, capsys):
    rc, out, _ = run(
        capsys, "census", "--ring", "Z:2^2", "--n", "3", "--lambda", "1",
        "--out", str(tmp_path / "checked"), "--no-plot", "--check",
    )
    assert rc == 0 and "81 rows" in out


def test_empty_census_is_header_only(tmp_path):
    from ringcodes.census import write_census_csv

    path = tmp_path / "empty.csv"
    write_census_csv([], path)
    assert path.read_text().strip() == (
        "ring,n,lambda,tower1,tower2,ell,dim1,dim2,eaqec,tau1,tau2,"
        "formula_tau_matches"
    )


def test_exit_code_usage():
    with pytest.raises(SystemExit) as exc:
        main(["constacyclic", "bogus-action", "--ring", "Z:2^2", "--n", "3", "--lambda", "1"])
    assert exc.value.code == 2


def test_exit_code_usage_error(capsys):
    rc, _, err = run(
        capsys, "constacyclic", "intersect", "--ring", "Z:2^2", "--n", "7",
        "--lambda", "-1", "--c1", "D0=1,2;D1=2",
    )
    assert rc == 2 and "usage error" in err


def test_exit_code_infeasible(tmp_path, capsys):
    z4 = ring("Z:2^2")
    big = Code(z4, 30, [tuple(1 if i == j else 0 for j in range(30)) for i in range(30)])
    path = tmp_path / "big.json"
    save_code(path, big)
    rc, _, err = run(capsys, "code", "info", str(path))
    assert rc == 3 and "infeasible" in err


def test_exit_code_verification_failure(capsys):
    # lambda = 1 + gamma: residue-only pi(lambda^2) = 1, where the
    # self-reciprocal criterion is unsound; the oracle check trips.
    rc, _, err = run(
        capsys, "constacyclic", "lcd", "--ring", "Fgamma:5^2", "--n", "4",
        "--lambda", "[1,1]", "--c1", "D0=0;D1=0",
    )
    assert rc == 1 and "verification failed" in err


def test_unchecked_polynomial_tower(capsys):
    rc, out, _ = run(
        capsys, "constacyclic", "build", "--ring", "Z:2^2", "--n", "7",
        "--lambda", "-1", "--c1", "poly:[1,3,1,3,1,3,1],[1,2,1,1]", "--unchecked",
    )
    # D0 = fg (degree 6 product), D1 = f
    assert rc == 0 and "dim = 5" in out

    rc, _, err = run(
        capsys, "constacyclic", "build", "--ring", "Z:2^2", "--n", "7",
        "--lambda", "-1", "--c1", "poly:[1,3,1,3,1,3,1],[1,2,1,1]",
    )
    assert rc == 2 and "unchecked" in err

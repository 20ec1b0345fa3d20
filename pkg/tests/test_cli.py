import csv
import io
import json

import pytest

from qups.cli import main, parse_indices
from qups.errors import DomainError
from qups.fileformat import read_pointset


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_fibonacci(tmp_path, capsys):
    path = tmp_path / "fib.txt"
    assert main(["gen", "--kind", "fibonacci", "--m", "6", "--out", str(path)]) == 0
    P = read_pointset(path)
    assert P.n == 8 and P.representation == "rat" and P.params["g"] == [1, 5]


def test_gen_kronecker_and_grid(capsys):
    code, out, _ = run(["gen", "--kind", "kronecker", "--alpha", "pow2", "--dim", "2", "--count", "1024"], capsys)
    assert code == 0 and "qups 1 2 1024 f64" in out
    code, out, _ = run(["gen", "--kind", "grid", "--m", "2", "--dim", "2"], capsys)
    assert code == 0 and "qups 1 2 4 rat" in out


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--kind", "frolov", "--dim", "2", "--a", "16"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_gen_errors(capsys):
    code, _, err = run(["gen", "--kind", "rank1", "--g", "2,4", "--N", "8"], capsys)
    assert code == 2 and "gcd" in err
    code, _, err = run(["gen", "--kind", "rank1", "--g", "1,5"], capsys)
    assert code == 2 and "--N" in err
    code, _, err = run(["gen", "--kind", "grid", "--m", "5000", "--dim", "2"], capsys)
    assert code == 3
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--kind", "sobol"])
    assert exc.value.code == 2


def test_analyze(tmp_path, capsys):
    fib = tmp_path / "fib.txt"
    main(["gen", "--kind", "fibonacci", "--m", "6", "--out", str(fib)])
    code, out, _ = run(["analyze", str(fib), "--metrics", "sep,mesh,dual"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["q_exact"] == "1/8" and rep["rho_hi"] <= 12 and rep["kappa"] == 4
    assert rep["p"] == "inf"
    grid = tmp_path / "g.txt"
    main(["gen", "--kind", "grid-aniso", "--m", "2", "--dim", "2", "--out", str(grid)])
    code, out, _ = run(["analyze", str(grid), "--metrics", "sep,dstar"], capsys)
    rep = json.loads(out)
    assert rep["q"] == 0.125 and rep["n"] == 8 and rep["dstar_is_lower_bound"] is False
    code, _, err = run(["analyze", str(grid), "--metrics", ""], capsys)
    assert code == 2


def test_profile(capsys):
    code, out, _ = run(["profile", "--kind", "kronecker", "--alpha", "golden", "--dim", "1",
                        "--indices", "pow2:4..10"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [int(r["index"]) for r in rows] == [2 ** i for i in range(4, 11)]
    assert max(float(r["rho_hi"]) for r in rows) < 4
    code, out, _ = run(["profile", "--kind", "frolov", "--dim", "2", "--indices", "4,8,16,32"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["nested"] for r in rows[1:]] == ["true"] * 3
    code, _, _ = run(["profile", "--kind", "frolov", "--indices", "8,4"], capsys)
    assert code == 2


def test_parse_indices():
    assert parse_indices("pow2:2..4") == [4, 8, 16]
    assert parse_indices("3..5") == [3, 4, 5]
    assert parse_indices("1,7") == [1, 7]
    with pytest.raises(DomainError):
        parse_indices("pow2:a..b")


def test_search(tmp_path, capsys):
    summary = tmp_path / "s.json"
    code, out, _ = run(["search", "--N", "31", "--dim", "2", "--thresholds", "auto",
                        "--summary", str(summary)], capsys)
    assert code == 0
    data = json.loads(summary.read_text())
    assert data["fraction_exact"] == "2/3" and data["scanned"] == 900
    assert len(out.strip().splitlines()) == 1 + data["passed"]
    code, _, err = run(["search", "--N", "30"], capsys)
    assert code == 2 and "prime" in err
    code, out, _ = run(["search", "--N", "5", "--kappa-dual-min", "2", "--include-zero"], capsys)
    assert len(out.strip().splitlines()) == 1 + 16
    code, _, _ = run(["search", "--N", "31", "--budget", "5"], capsys)
    assert code == 3


def test_verify_bounds(capsys):
    code, out, _ = run(["verify-bounds", "--suite", "cf"], capsys)
    assert code == 0 and out.count("PASS") == 3


def test_verify_bounds_failure_exit(monkeypatch, capsys):
    from qups import verify
    monkeypatch.setitem(verify.RECORDED, "frolov_rho_hi", 1.0)
    code, out, err = run(["verify-bounds", "--suite", "frolov"], capsys)
    assert code == 4 and "FAIL" in out and "violated" in err

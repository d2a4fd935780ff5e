import json
from fractions import Fraction
import subprocess
import sys

import pytest

from known_values import F_LATEX, OMEGA_9
from powersum import faulhaber as fh
from powersum.cli import main
from powersum.tables import parse_json_rationals


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_bernoulli_csv(capsys):
    code, out, _ = run(["bernoulli", "--max", "8", "--format", "csv"], capsys)
    assert code == 0
    assert "6,1/42" in out.splitlines()
    _, out, _ = run(["bernoulli", "--max", "0", "--format", "csv"], capsys)
    assert out.splitlines()[1:] == ["0,1"]
    _, out, _ = run(["bernoulli", "--max", "10", "--genocchi", "--format", "csv"], capsys)
    assert "10,-155" in out.splitlines()


def test_bernoulli_bad_args(capsys):
    code, _, err = run(["bernoulli", "--max", "-1"], capsys)
    assert code != 0 and "error" in err
    with pytest.raises(SystemExit):
        main(["bernoulli", "--max", "3", "--format", "xml"])


def test_faulhaber_latex(capsys):
    _, out, _ = run(["faulhaber", "--n", "9", "--format", "latex"], capsys)
    assert out == F_LATEX[9]
    _, out, _ = run(["faulhaber", "--n", "9", "--basis", "omega", "--format", "latex"], capsys)
    assert OMEGA_9 in out
    _, out, _ = run(["faulhaber", "--n", "9", "--basis", "u", "--format", "latex"], capsys)
    assert r"\frac{1}{10} u^2 ( u^3 - \frac{5}{2} u^2 + 3 u - \frac{3}{2} )" in out


def test_faulhaber_omega_needs_odd(capsys):
    code, _, err = run(["faulhaber", "--n", "8", "--basis", "omega"], capsys)
    assert code == 2 and "odd" in err


@pytest.mark.parametrize("method", ["auto", "substitution", "gv", "triangular", "chain"])
def test_faulhaber_json_roundtrip(method, capsys):
    _, out, _ = run(["faulhaber", "--n", "12", "--method", method, "--format", "json"], capsys)
    data = json.loads(out)
    assert fh.FaulhaberPoly.from_json(data) == fh.faulhaber(12)
    assert parse_json_rationals(out)["coeffs"] == list(fh.faulhaber(12).coeffs)


def test_faulhaber_csv(capsys):
    _, out, _ = run(["faulhaber", "--n", "7", "--format", "csv"], capsys)
    assert out.splitlines() == ["n,k,value", "7,0,1/3", "7,1,-4/3", "7,2,2"]


def test_powersum(capsys):
    for strategy in ["naive", "bernoulli", "faulhaber", "omega", "all"]:
        _, out, _ = run(["powersum", "--n", "9", "--m", "3", "--strategy", strategy], capsys)
        assert out == "513"
    _, out, _ = run(["powersum", "--n", "3", "--m", "10", "--strategy", "faulhaber"], capsys)
    assert out == "2025"
    _, out, _ = run(["powersum", "--n", "0", "--m", "5", "--strategy", "naive"], capsys)
    assert out == "5"
    code, _, err = run(["powersum", "--n", "2", "--m", "100", "--strategy", "naive", "--naive-limit", "10"], capsys)
    assert code == 2
    # the flag must not leak into the process environment
    _, out, _ = run(["powersum", "--n", "2", "--m", "100", "--strategy", "naive"], capsys)
    assert out == "328350"


def test_powersum_big_m(capsys):
    m = 10**30
    _, out, _ = run(["powersum", "--n", "5", "--m", str(m), "--strategy", "all"], capsys)
    assert int(out) == (m * (m - 1)) ** 2 * (2 * m * (m - 1) - 1) // 12


@pytest.mark.parametrize("suite", ["zero-sums", "historical", "stern", "rfold"])
def test_verify_suites(suite, capsys):
    code, out, _ = run(["verify", "--suite", suite, "--max", "13"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_verify_smallest(capsys):
    code, out, _ = run(["verify", "--suite", "all", "--max", "3"], capsys)
    assert code == 0


def test_verify_rejects_small_max(capsys):
    code, _, _ = run(["verify", "--max", "2"], capsys)
    assert code == 2


def test_rfold(capsys):
    _, out, _ = run(["rfold", "--n", "3", "--r", "1", "--format", "json"], capsys)
    data = parse_json_rationals(out)
    assert data["g"] == [0, Fraction(1, 2)] and data["d"] == 1
    code, _, _ = run(["rfold", "--n", "6", "--r", "4", "--format", "latex"], capsys)
    assert code == 0
    _, out, _ = run(["rfold", "--n", "1", "--r", "1", "--format", "csv"], capsys)
    assert "g,0,1" in out.splitlines()


def test_bench(capsys):
    code, out, _ = run(["bench", "--n", "3", "--m", "10", "--reps", "1"], capsys)
    assert code == 0 and "all strategies agree" in out
    _, out, _ = run(["bench", "--n", "2", "--m", "0", "--reps", "1"], capsys)
    assert out.startswith("S_2(0)")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "powersum.cli", "powersum", "--n", "9", "--m", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "513"

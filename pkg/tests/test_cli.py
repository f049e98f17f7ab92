import io
import json

from mpdiag.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_multiply_partition_orbit_basis():
    code, text = run("multiply", "--algebra", "P", "--basis", "T", "-r", "1", "{{1},{-1}}", "{{1},{-1}}")
    assert code == 0
    assert text.strip() == "(x - 2) * T{{1},{-1}} + (x - 1) * T{{1,-1}}"


def test_multiply_mp():
    code, text = run("multiply", "[[1,-1]]", "[[1,-1]]")
    assert code == 0 and text.strip() == "1 * [[1,-1]]"


def test_convert_json():
    code, text = run("convert", "--from", "D", "--to", "X", "[[1,-1],[1,-1],[2,2,-1,-2]]", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["basis"] == "X"
    coeffs = sorted((t["coeff"]["num"][0], t["coeff"]["den"][0]) for t in data["terms"])
    assert coeffs == [(1, 1), (1, 3), (1, 3), (2, 3)]


def test_dims():
    code, text = run("dims", "-r", "2", "-k", "2", "-n", "5")
    assert code == 0
    assert "sum of squares  95" in text and "algebra dimension  95" in text


def test_enumerate_sspt():
    code, text = run("enumerate", "sspt", "-r", "2", "--shape", "3,1")
    assert code == 0 and "# 3 items" in text


def test_act():
    code, text = run("act", "-n", "6", "{{2,-3},{3,-2},{5,-4,-5},{1},{4},{-1}}",
                     "(([], [], [5]) / ([1,2], [4]) / ([3]))")
    assert code == 0 and text.strip() == "-1 * (([], [1], [4]) / ([2], [5]) / ([3]))"


def test_factor():
    code, text = run("factor", "[[1,-1],[1,2,2,3,-1,-1],[3,-2,-2],[-2]]", "--block", "[[1,2,2,3,-1,-1]]")
    assert code == 0 and "x^2/10" in text and "remaining terms smaller: True" in text


def test_verify_quick_suites():
    for suite in ("dimension", "associativity", "snapshot", "change-of-basis"):
        code, text = run("verify", "--suite", suite, "-r", "2", "-k", "2", "--samples", "50")
        assert code == 0 and text.startswith("PASS")


def test_errors():
    assert run("multiply", "{{1}")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("enumerate", "sp", "-r", "9")[0] == 1

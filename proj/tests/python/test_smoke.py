import json

import pytest

import flopcalc


def test_builtins():
    names = flopcalc.builtin_names()
    assert "laufer" in names and "length6" in names
    text = flopcalc.presentation("laufer")
    assert text.startswith("name: laufer")
    assert flopcalc.presentation(text) == text


def test_nice_basis_equation():
    f = flopcalc.hypersurface(2, nice_basis=True)["f"]
    assert f == "t^2*u*w - t^2*v^2 + y^2*u + 2*y*z*v + z^2*w + x^2"


def test_length3_factorization():
    mf = flopcalc.matrix_factorization(3, map="length3")
    assert mf["ok"]
    assert len(mf["C"]) == 6 and all(len(r) == 6 for r in mf["C"])


def test_contraction_and_gv():
    r = flopcalc.contraction("laufer")
    assert (r["dim"], r["dim_ab"]) == (9, 5)
    assert r["gv"] == [[5, 1, 0, 0, 0, 0]]
    assert flopcalc.gv_invariants(27, 6, 3) == [[6, 3, 1, 0, 0, 0]]
    assert flopcalc.gv_invariants(3, 5) == []


def test_normal_form_and_dimension():
    assert flopcalc.normal_form("laufer-con", "c^3") == "b*b"
    assert flopcalc.dimension("laufer-con") == 9


def test_checks():
    lines = flopcalc.verify_representation("length2", "U0")
    assert len(lines) == 5 and all(ok for _, ok, _ in lines)
    lines = flopcalc.verify_superpotential("laufer", "1/2*a*A*a*A - a*c^2*A - c*b^2 + 1/4*c^4")
    assert all(ok for _, ok, _ in lines)


def test_errors():
    with pytest.raises(flopcalc.ParseError):
        flopcalc.presentation("vertices: 0\narrows: x: 0 -> 9\n")
    with pytest.raises(flopcalc.DomainError):
        flopcalc.presentation("no-such-algebra")
    assert issubclass(flopcalc.BudgetExceeded, flopcalc.FlopcalcError)


def test_cli_passthrough():
    code, out, err = flopcalc.run(["--format", "structured", "contraction", "--builtin", "laufer"])
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "schema: 1"
    records = [json.loads(l) for l in lines[1:]]
    assert records[1]["dim"] == 9
    assert flopcalc.run(["gb", "--in", "/nonexistent"])[0] == 3
    assert flopcalc.run(["hypersurface", "--length", "5"])[0] == 3

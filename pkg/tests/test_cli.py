import io
import json
from fractions import Fraction

import pytest

from exotic_series.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_eval_geom_x1():
    code, text = call("eval", "--identity", "id-geom-x1", "--y", "1")
    assert code == 0
    rows = dict(line.split(None, 1) for line in text.splitlines())
    for key in ("series", "quadrature", "closed"):
        assert rows[key] == "2.71828182845905"


def test_numbers_bernoulli_exact():
    code, text = call("numbers", "bernoulli", "--n", "4", "--exact")
    assert code == 0
    assert text.split() == ["1", "-1/2", "1/6", "0", "-1/30"]


@pytest.mark.parametrize("family", ["bernoulli", "harmonic", "derangement", "catalan", "bell"])
def test_numbers_exact_parse_as_fractions(family):
    code, text = call("numbers", family, "--n", "12", "--exact")
    assert code == 0
    assert len([Fraction(v) for v in text.split()]) == 13


def test_numbers_stirling_needs_k(capsys):
    assert call("numbers", "stirling2", "--n", "3")[0] == 2
    assert "--k" in capsys.readouterr().err
    assert call("numbers", "stirling2", "--n", "4", "--k", "2", "--exact")[1].split() == [
        "0", "0", "1", "3", "7"
    ]


def test_numbers_float_digits():
    _, text = call("numbers", "harmonic", "--n", "3")
    assert text.split() == ["0", "1", "1.5", "1.83333333333333"]


def test_poly():
    assert call("poly", "exp", "--n", "4", "--x", "1", "--exact")[1].strip() == "15"
    _, text = call("poly", "laguerre", "--n", "2", "--exact")
    assert text.splitlines() == ["0 1", "1 -2", "2 1/2"]


def test_verify_json_pass():
    code, text = call("verify", "--identity", "id-geom", "--format", "json")
    assert code == 0
    assert json.loads(text)["verdict"] == "pass"


def test_verify_grid_and_out(tmp_path):
    out = tmp_path / "r.csv"
    code, text = call(
        "verify", "--identity", "id-binom", "--grid", "x=0.5,2;y=-1:1:1;p=2", "--format", "csv",
        "--out", str(out),
    )
    assert code == 0 and text == ""
    assert len(out.read_text().splitlines()) == 1 + 6


def test_verify_failure_exit_code():
    code, _ = call("verify", "--identity", "exppoly-xm1", "--grid", "y=1;lambda=0")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--identity", "id-nope"),
        ("eval", "--identity", "id-nope", "--y", "1"),
        ("verify", "--identity", "id-geom", "--grid", ""),
        ("verify", "--identity", "id-geom", "--grid", "y=1:0:1"),
        ("verify", "--all", "--grid", "y=1"),
        ("verify",),
        ("eval", "--identity", "id-geom", "--y", "1"),
        ("eval", "--identity", "id-bern", "--x", "5", "--y", "3"),
        ("eval", "--identity", "id-binom", "--x", "1", "--y", "1", "--param", "p=1.5"),
        ("eval", "--identity", "id-geom", "--x", "1", "--y", "1", "--tol", "0"),
        ("eval", "--identity", "exppoly-xm1", "--y", "1", "--param", "lam=0"),
        ("bogus",),
    ],
)
def test_usage_errors(argv, capsys):
    code, out = call(*argv)
    assert code == 2
    assert out == ""
    assert capsys.readouterr().err


def test_unknown_identity_rejected_before_compute(monkeypatch):
    import exotic_series.cli as cli

    def boom(*a, **k):
        raise AssertionError("computed")

    monkeypatch.setattr(cli, "verify_identity", boom)
    assert call("verify", "--identity", "nope")[0] == 2


def test_identical_invocations_identical_bytes():
    a = call("verify", "--identity", "id-stirling", "--format", "json")
    b = call("verify", "--identity", "id-stirling", "--format", "json")
    assert a == b and a[0] == 0


def test_list():
    code, text = call("list")
    assert code == 0 and len(text.splitlines()) == 17

import json

import pytest
from hypothesis import given, strategies as st

from ukrull import cli
from ukrull.cli import Expr, parse, render
from ukrull.errors import ParseError

ints = st.integers(0, 40)
atoms = st.one_of(
    st.builds(lambda n: Expr("free", (n,)), ints),
    st.builds(lambda n: Expr("bz2", (n,)), ints),
    st.builds(lambda n: Expr("kvm", (n,)), ints),
    st.sampled_from([Expr("s3q8"), Expr("bq8"), Expr("example62")]),
)
exprs = st.recursive(atoms, lambda sub: st.one_of(
    st.builds(lambda s, e: Expr("susp", (s, e)), ints, sub),
    st.builds(lambda e: Expr("phi", (e,)), sub),
    st.builds(lambda a, b: Expr("tensor", (a, b)), sub, sub),
    st.builds(lambda r, e: Expr("trunc", (r, e)), ints, sub),
    st.builds(lambda e: Expr("ufree", (e,)), sub),
), max_leaves=6)


def test_parse_examples():
    assert parse("tensor(free(1), free(1))") == Expr("tensor", (Expr("free", (1,)), Expr("free", (1,))))
    assert parse("phi(phi(free(1)))") == Expr("phi", (Expr("phi", (Expr("free", (1,)),)),))
    assert parse("susp(1, free(3))") == Expr("susp", (1, Expr("free", (3,))))
    assert parse("  tensor ( free ( 1 ) ,free(2))") == parse("tensor(free(1), free(2))")


@given(exprs)
def test_parse_render_round_trip(e):
    assert parse(render(e)) == e


@given(exprs)
def test_parse_ignores_whitespace(e):
    spaced = render(e).replace("(", " ( ").replace(",", " , ")
    assert parse(spaced) == e


@pytest.mark.parametrize("text, offset, expected", [
    ("", 0, set(cli.SIGNATURES)),
    ("frees(1)", 0, set(cli.SIGNATURES)),
    ("free 1", 5, {"("}),
    ("free(x)", 5, {"integer"}),
    ("tensor(free(1) free(2))", 15, {","}),
    ("susp(1, free(3)) extra", 17, {"end of input"}),
    ("phi(free(1)", 11, {")"}),
    ("free(-1)", 5, {"integer"}),
])
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected == frozenset(expected)


def test_byte_offsets():
    with pytest.raises(ParseError) as info:
        parse("tensor(free(1),é)")
    assert info.value.offset == 15


def test_krull_report_matches_binary_digits():
    code, out = cli.run(["krull", "--max", "2", "bz2(1)", "--degree", "16", "--json"])
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"command", "degree_cap", "cert", "tables", "assertions"}
    assert rep["command"] == "krull --max 2 bz2(1)" and rep["degree_cap"] == 16
    k1 = next(t["dims"] for t in rep["tables"] if t["name"] == "k_1")
    assert [d for d, x in enumerate(k1) if x] == [0, 1, 2, 4, 8, 16]
    assert all(set(a) == {"anchor", "pass"} and a["pass"] for a in rep["assertions"])


def test_sigma_of_free():
    code, out = cli.run(["sigma", "--max", "2", "free(1)", "--json"])
    assert code == 0
    dims = {t["name"]: t["dims"] for t in json.loads(out)["tables"]}
    assert dims["sigma_1"][0] == 1 and not any(dims["sigma_1"][1:])
    assert not any(dims["sigma_0"]) and not any(dims["sigma_2"])


def test_verify_example62():
    code, out = cli.run(["verify", "example62"])
    assert code == 0
    assert "result: PASS" in out


@pytest.mark.parametrize("argv", [
    ["info", "tensor(free(1), free(1))", "--degree", "12"],
    ["nil", "example62", "--degree", "16"],
    ["tbar", "--iter", "2", "free(2)", "--degree", "10"],
])
def test_reports_are_deterministic(argv):
    a, b = cli.run(argv), cli.run(argv)
    assert a == b and a[0] == 0


def test_exit_codes():
    assert cli.run(["info", "free(1"])[0] == 2
    assert cli.run(["bogus"])[0] == 2
    assert cli.run(["verify", "nope"])[0] == 2
    code, out = cli.run(["info", "trunc(100, free(1))", "--degree", "8"])
    assert code == 2 and "100" in out


def test_failed_assertion_exits_one(monkeypatch):
    def failing(e, D, gw, rep, **_):
        rep.cert = D
        rep.check("deliberately false", False)

    monkeypatch.setitem(cli.COMMANDS, "info", failing)
    code, out = cli.run(["info", "free(1)"])
    assert code == 1 and "FAIL deliberately false" in out


def test_main_prints(capsys):
    assert cli.main(["info", "free(2)", "--degree", "6"]) == 0
    assert "dims: 0 0 1 1 1 1 1" in capsys.readouterr().out

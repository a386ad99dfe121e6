import json

import pytest

import smcnets


@pytest.fixture
def lam():
    return smcnets.fixture("lambda.smc")


@pytest.fixture
def monoid():
    return smcnets.fixture("monoid.smc")


def test_beta_arity(lam):
    t = lam.term("app . (lam * id x)")
    assert str(lam.arity(t)) == "(x -o x) * x -> x"


def test_beta_search(lam):
    lhs = lam.term("app . (lam * id x)")
    rhs = lam.term("eval x x")
    assert not smcnets.nets_equal(lam.translate(lhs), lam.translate(rhs))
    assert not smcnets.theory_equal_bounded(lhs, rhs, lam, 0).equal
    r = smcnets.theory_equal_bounded(lhs, rhs, lam, 1)
    assert r.equal
    assert r.trace == ["beta (lhs -> rhs) at root: eval x x"]


def test_monoid_units(monoid):
    r = smcnets.theory_equal_bounded(monoid.term("m . (e * id x)"), monoid.term("lunit x"), monoid, 1)
    assert r.trace == ["left_unit (lhs -> rhs) at root: lunit x"]


def test_net_json_round_trip(lam):
    n = lam.translate(lam.term("app . (lam * id x)"))
    assert n.support == ["app", "lam"]
    assert smcnets.is_correct(n)
    doc = json.loads(n.to_json())
    assert doc["dom"] == "(x -o x) * x"
    assert lam.net_from_json(n.to_json()) == n


def test_curry_and_compose():
    x = smcnets.Formula.parse("x * I")
    idn = smcnets.identity_net(x)
    assert smcnets.compose(idn, idn) == idn
    assert smcnets.uncurry(smcnets.curry(idn)) == idn
    assert smcnets.par_count(idn) == 1


def test_errors(lam):
    with pytest.raises(smcnets.ParseError):
        lam.term("app .")
    with pytest.raises(smcnets.SmcTypeError):
        lam.arity(lam.term("app . app"))
    with pytest.raises(ValueError):
        smcnets.parse_theory("sort")


def test_cli():
    status, out, _ = smcnets.run(["check", "lambda.smc", "app . (lam * id x)"])
    assert status == 0
    assert out == "(x -o x) * x -> x\n"

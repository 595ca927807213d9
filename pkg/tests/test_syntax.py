import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pik import gates
from pik.errors import ParseError
from pik.randterm import random_term
from pik.semantics import eval_term
from pik.syntax import parse, pretty
from pik.term import Comp, Id, Kron, Scale, Sum, SwapPlus, V, Zeta, term_conj, term_dagger


def test_parse_examples():
    assert parse("V ; V", 2) == Comp(V, V)
    assert parse("id(1) (+) zeta^2", 2) == Sum(Id(1), Zeta(2))
    assert parse("V ; X ; S", 2) == Comp(gates.S(2), Comp(SwapPlus(1, 1), V))
    assert parse("V (x) V (+) id(1)", 2) == Sum(Kron(V, V), Id(1))
    assert parse("zeta^-3", 2) == Zeta(-3)
    assert parse("scale(3, V ; V)", 2) == Scale(3, Comp(V, V))
    assert parse("ctrl(V)", 2) == Sum(Id(2), V)
    assert parse("cphase(3)", 4) == gates.cphase(3, 4)
    assert parse("dagger(zeta)", 3) == term_dagger(Zeta(1))
    assert parse("conj(zeta)", 3) == term_conj(Zeta(1), 3)
    assert parse("H  # comment\n", 3) == gates.H(3)


def test_parse_errors():
    with pytest.raises(ParseError, match="requires k >= 3"):
        parse("H", 2)
    with pytest.raises(ParseError, match="requires k >= 3"):
        parse("omega", 2)
    with pytest.raises(ParseError) as err:
        parse("V ;\n  id(", 2)
    assert (err.value.line, err.value.col) == (2, 6)
    with pytest.raises(ParseError):
        parse("V V", 2)
    with pytest.raises(ParseError):
        parse("foo", 2)
    with pytest.raises(ParseError):
        parse("id(0)", 2)
    with pytest.raises(ParseError):
        parse("cphase(5)", 3)
    with pytest.raises(ParseError):
        parse("V $", 2)


def test_arity_errors_are_deferred():
    t = parse("V ; id(3)", 2)
    assert t == Comp(Id(3), V)


def test_pretty_examples():
    assert pretty(Comp(V, V)) == "V ; V"
    assert pretty(Sum(Sum(V, V), V)) == "V (+) V (+) V"
    assert pretty(Sum(V, Sum(V, V))) == "V (+) (V (+) V)"
    assert pretty(Kron(Sum(V, V), V)) == "(V (+) V) (x) V"
    assert pretty(Comp(V, Comp(V, V))) == "V ; V ; V"
    assert pretty(Comp(Comp(V, V), V)) == "V ; (V ; V)"


def test_round_trip_on_random_terms():
    rng = random.Random(0)
    for _ in range(1000):
        k = rng.randint(2, 5)
        t = random_term(rng, k, rng.randint(1, 8), depth=4)
        text = pretty(t)
        assert parse(text, k) == t
        assert pretty(parse(text, k)) == text


@given(st.integers(1, 12), st.integers(-40, 40), st.integers(2, 5))
def test_round_trip_small(n, j, k):
    t = Sum(Scale(j, Id(n)), Zeta(j))
    assert parse(pretty(t), k) == t


def test_parsed_gates_evaluate():
    assert eval_term(parse("H ; H", 3), 3).is_identity()
    assert eval_term(parse("S ; S", 4), 4) == eval_term(gates.Z(4), 4)

import random

import pytest

from pik import gates
from pik.decide import (
    ApproxWitness,
    PhaseWitness,
    approx_witness_compose,
    decide_approx,
    eq,
    eq_up_to_phase,
    reflexive_witness,
)
from pik.errors import ShapeError, WitnessError
from pik.randterm import equal_variant, random_term
from pik.semantics import eval_term
from pik.term import Comp, Id, Kron, Scale, Sum, V, X, Zeta


def test_eq_examples():
    k = 3
    s, h = gates.S(k), gates.H(k)
    assert eq(Comp(V, Comp(s, V)), Comp(s, Comp(V, s)), k)
    assert eq(Comp(h, h), Id(2), k)
    assert not eq(V, X, k)
    with pytest.raises(ShapeError):
        eq(V, Id(3), k)


def test_phase_examples():
    rng = random.Random(0)
    k = 3
    t = random_term(rng, k, 4)
    assert eq_up_to_phase(t, Scale(5, t), k) == PhaseWitness((1 << k) - 5)
    assert eq_up_to_phase(t, t, k) == PhaseWitness(0)
    assert eq_up_to_phase(V, X, k) is None


def test_phase_witness_is_sound_and_complete():
    rng = random.Random(1)
    for k in (2, 3, 4):
        for _ in range(40):
            a = random_term(rng, k, rng.randint(1, 4))
            b = Scale(rng.randrange(1 << k), equal_variant(rng, k, a)) if rng.random() < 0.5 else random_term(rng, k, a.dim)
            w = eq_up_to_phase(a, b, k)
            if w is not None:
                assert eq(Scale(w.j, b), a, k)
            else:
                assert not any(eq(Scale(j, b), a, k) for j in range(1 << k))


def test_eq_is_a_congruence():
    rng = random.Random(2)
    k = 3
    for _ in range(30):
        a = random_term(rng, k, 3)
        a2 = equal_variant(rng, k, a)
        c = random_term(rng, k, 3)
        d = random_term(rng, k, 2)
        assert eq(a, a2, k) and eq(a2, a, k)
        assert eq(Comp(c, a), Comp(c, a2), k)
        assert eq(Sum(a, d), Sum(a2, d), k)
        assert eq(Kron(d, a), Kron(d, a2), k)


def test_decide_approx_examples():
    k = 3
    assert decide_approx(V, V, k)
    assert decide_approx(Comp(gates.H(k), gates.H(k)), Id(2), k)
    assert not decide_approx(V, X, k)


def test_padding_never_rescues_unequal_terms():
    # a (+) b = a' (+) b' with equal-sized padding forces a = a' (cancellativity)
    rng = random.Random(3)
    k = 2
    found = 0
    for _ in range(300):
        n = rng.randint(1, 3)
        a, a2 = random_term(rng, k, n, 2), random_term(rng, k, n, 2)
        m = rng.randint(1, 3)
        b, b2 = random_term(rng, k, m, 2), random_term(rng, k, m, 2)
        if eq(Sum(a, b), Sum(a2, b2), k):
            found += 1
            assert eq(a, a2, k)
    assert found > 0


def test_witnesses():
    k = 3
    a = Comp(V, V)
    w1 = ApproxWitness(a, X, Zeta(1), Zeta(1))
    assert w1.verify(k) and w1.flip().verify(k)
    r = reflexive_witness(X)
    assert approx_witness_compose(reflexive_witness(a), reflexive_witness(a), k).verify(k)
    w2 = ApproxWitness(X, Comp(X, Comp(V, Comp(V, X))), Zeta(3), Zeta(3))
    w = approx_witness_compose(w1, w2, k)
    assert w.verify(k)
    assert w.b == Comp(Zeta(3), Zeta(1))
    assert approx_witness_compose(w1, r, k).verify(k)
    with pytest.raises(WitnessError):
        approx_witness_compose(ApproxWitness(V, X, Zeta(1), Zeta(1)), r, k)


def test_random_witness_pasting():
    rng = random.Random(4)
    k = 3
    for _ in range(20):
        a = random_term(rng, k, 2)
        a1, a2 = equal_variant(rng, k, a), equal_variant(rng, k, a)
        b, b1 = random_term(rng, k, 2), None
        b1 = equal_variant(rng, k, b)
        c, c1 = random_term(rng, k, 2), None
        c1 = equal_variant(rng, k, c)
        w = approx_witness_compose(ApproxWitness(a, a1, b, b1), ApproxWitness(a1, a2, c, c1), k)
        assert eval_term(Sum(w.lhs, w.b), k) == eval_term(Sum(w.rhs, w.b2), k)

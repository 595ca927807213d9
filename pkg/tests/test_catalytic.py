import random

import pytest

from pik import gates
from pik.catalytic import catalysis_check, catalysis_sides, catalyst, phi, phi_iterate, precision_transfer_check
from pik.decide import eq
from pik.errors import PrecisionError
from pik.linalg import ExactMatrix
from pik.randterm import equal_variant, random_term
from pik.ring import zeta_pow
from pik.semantics import eval_term
from pik.term import Comp, Id, Kron, Sum, V, X, Zeta, dim, lift_term


def test_phi_examples():
    assert phi(V, 3) == Sum(V, V)
    assert phi(Id(3), 4) == Id(6)
    assert phi(Zeta(1), 3) == Comp(Sum(Zeta(0), Zeta(0)), Comp(X, Sum(Id(1), Zeta(1))))
    assert eval_term(phi(Zeta(1), 3), 2) == eval_term(Comp(X, Sum(Id(1), Zeta(1))), 2)
    with pytest.raises(PrecisionError):
        phi(V, 2)


def test_phi_of_zeta_squares_to_scalar():
    for k in (3, 4, 5):
        for j in range(1 << k):
            m = eval_term(phi(Zeta(j), k), k - 1)
            # phi(zeta)^2 is zeta_(k-1) times the identity
            p = eval_term(phi(Zeta(1), k), k - 1)
            ref = ExactMatrix.identity(k - 1, 2)
            for _ in range(j):
                ref = p @ ref
            assert m == ref


def test_catalyst():
    for k in (3, 4):
        for n in (1, 2, 3):
            c = catalyst(k, n)
            assert dim(c) == 2 * n
            assert eval_term(c, k).is_unitary()
    h, t = eval_term(gates.H(3), 3), eval_term(gates.T(3), 3)
    assert eval_term(catalyst(3, 1), 3) == h @ t
    with pytest.raises(PrecisionError):
        catalyst(2, 1)


def test_catalysis_on_generators():
    k = 3
    lhs, rhs = catalysis_sides(Zeta(1), k)
    z = zeta_pow(k, 1)
    assert lhs == rhs == ExactMatrix.from_entries(k, [[z, 0], [0, -z]])
    lhs, rhs = catalysis_sides(V, k)
    v = eval_term(V, k)
    assert lhs == rhs == v.direct_sum(v)


def test_catalysis_on_derived_gates():
    for k in (3, 4, 5):
        for t in (gates.S(k), gates.T(k), gates.H(k), gates.cphase(3, k), Kron(V, gates.T(k))):
            assert catalysis_check(t, k)


def test_phi_is_compositional():
    rng = random.Random(0)
    k = 4
    for _ in range(20):
        a, b = random_term(rng, k, 3), random_term(rng, k, 3)
        assert eval_term(phi(Comp(a, b), k), k - 1) == eval_term(Comp(phi(a, k), phi(b, k)), k - 1)


def test_precision_transfer_examples():
    k = 3
    s = gates.S(k)
    assert precision_transfer_check(V, V, k) and eq(phi(V, k), phi(V, k), 2)
    vsv, svs = Comp(V, Comp(s, V)), Comp(s, Comp(V, s))
    assert precision_transfer_check(vsv, svs, k) and eq(phi(vsv, k), phi(svs, k), 2)
    assert precision_transfer_check(V, X, k) and not eq(phi(V, k), phi(X, k), 2)


def test_iterated_lowering():
    rng = random.Random(1)
    k = 5
    for _ in range(10):
        a = random_term(rng, k, rng.randint(1, 2))
        b = equal_variant(rng, k, a) if rng.random() < 0.5 else random_term(rng, k, dim(a))
        la, lb = phi_iterate(a, k), phi_iterate(b, k)
        assert dim(la) == dim(a) << (k - 2)
        assert eq(a, b, k) == eq(la, lb, 2)


def test_lifted_image_is_level_k():
    a = Sum(V, Zeta(3))
    assert eval_term(lift_term(phi(a, 3)), 3) == eval_term(phi(a, 3), 2).lift(3)

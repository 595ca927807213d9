import random

import pytest

from oracles import close, float_term, transpose_index
from pik import gates
from pik.errors import PrecisionError, WellFormednessError
from pik.linalg import ExactMatrix, perm_matrix
from pik.randterm import random_term
from pik.semantics import eval_term
from pik.tensor import block_transposition, elaborate_kron, n_fold_sum, perm_term, sigma_tensor
from pik.term import (
    Comp,
    Id,
    Kron,
    Scale,
    Sum,
    SwapPlus,
    V,
    X,
    Zeta,
    compose,
    lift_term,
    node_types,
    power,
    term_conj,
    term_dagger,
    well_formed,
)

SUM_FRAGMENT = {Id, SwapPlus, Sum, Comp}


def test_well_formed_examples():
    assert well_formed(Id(5)) == (5, 5)
    assert well_formed(Comp(V, Id(2))) == (2, 2)
    assert well_formed(Kron(V, SwapPlus(1, 2))) == (6, 6)
    assert well_formed(Scale(3, Sum(V, Zeta(1)))) == (3, 3)
    with pytest.raises(WellFormednessError) as err:
        well_formed(Sum(Id(1), Comp(V, Id(3))))
    assert err.value.path == ("b",)
    with pytest.raises(WellFormednessError):
        well_formed(Id(0))


def test_conj_examples():
    assert term_conj(V, 3) == V
    assert term_conj(Zeta(1), 2) == Zeta(3)
    assert term_conj(Zeta(1), 4) == Zeta(9)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_conj_matches_entrywise_star(k):
    rng = random.Random(k)
    for _ in range(60):
        t = random_term(rng, k, rng.randint(1, 6))
        assert eval_term(term_conj(t, k), k) == eval_term(t, k).star_entrywise()
        assert eval_term(term_conj(term_conj(t, k), k), k) == eval_term(t, k)


def test_conj_at_k2_only_fails_through_v():
    # at k = 2 the star automorphism moves i, which V's entries contain
    assert eval_term(term_conj(V, 2), 2) != eval_term(V, 2).star_entrywise()
    rng = random.Random(0)
    for _ in range(40):
        t = random_term(rng, 2, rng.randint(1, 4))
        if V not in _leaves(t):
            assert eval_term(term_conj(t, 2), 2) == eval_term(t, 2).star_entrywise()


def _leaves(t):
    if isinstance(t, Comp):
        return _leaves(t.g) | _leaves(t.f)
    if isinstance(t, (Sum, Kron)):
        return _leaves(t.a) | _leaves(t.b)
    if isinstance(t, Scale):
        return _leaves(t.t)
    return {t}


@pytest.mark.parametrize("k", [2, 3, 4])
def test_dagger_properties(k):
    rng = random.Random(10 + k)
    assert term_dagger(Id(4)) == Id(4)
    for _ in range(60):
        t = random_term(rng, k, rng.randint(1, 8))
        m = eval_term(t, k)
        assert eval_term(term_dagger(t), k) == m.dagger()
        assert eval_term(Comp(term_dagger(t), t), k).is_identity()
        assert eval_term(term_dagger(term_dagger(t)), k) == m


def test_lift_examples():
    assert lift_term(V) == V
    assert lift_term(Zeta(1)) == Zeta(2)
    rng = random.Random(5)
    for k in (2, 3, 4):
        for _ in range(30):
            t = random_term(rng, k, rng.randint(1, 6))
            assert eval_term(lift_term(t), k + 1) == eval_term(t, k).lift(k + 1)


def test_n_fold_sum():
    assert n_fold_sum(V, 1) == V
    assert well_formed(n_fold_sum(Sum(V, Id(1)), 3))[0] == 9
    assert n_fold_sum(V, 3) == Sum(Sum(V, V), V)
    vv = eval_term(n_fold_sum(V, 2), 2)
    assert vv == eval_term(V, 2).direct_sum(eval_term(V, 2))
    with pytest.raises(ValueError):
        n_fold_sum(V, 0)


def test_sigma_tensor_examples():
    assert sigma_tensor(1, 5) == Id(5)
    assert sigma_tensor(4, 1) == Id(4)
    assert eval_term(sigma_tensor(2, 3), 2) == perm_matrix(transpose_index(2, 3), 2)
    for m, n in [(2, 3), (3, 4), (5, 2)]:
        assert eval_term(Comp(sigma_tensor(n, m), sigma_tensor(m, n)), 2).is_identity()


def test_transpose_equals_modular_form():
    # the lexicographic transpose sends x to m * x mod (mn - 1), fixing mn - 1
    for m in range(2, 7):
        for n in range(2, 7):
            p = transpose_index(m, n)
            big = m * n - 1
            assert p[:-1] == [(m * x) % big for x in range(big)]
            assert p[-1] == big


def test_perm_term_on_random_permutations():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 9)
        p = list(range(n))
        rng.shuffle(p)
        t = perm_term(p)
        assert node_types(t) <= SUM_FRAGMENT
        assert eval_term(t, 2) == perm_matrix(p, 2)


def test_block_transposition():
    for n in range(2, 7):
        for a in range(n):
            for b in range(n):
                p = list(range(n))
                p[a], p[b] = p[b], p[a]
                assert eval_term(block_transposition(a, b, n), 2) == perm_matrix(p, 2)


def test_elaborate_kron_examples():
    t = Comp(V, Sum(Id(1), Zeta(3)))
    assert elaborate_kron(Kron(Id(1), t)) == t
    xx = elaborate_kron(Kron(X, X))
    assert Kron not in node_types(xx) and Scale not in node_types(xx)
    assert eval_term(xx, 2) == perm_matrix([3, 2, 1, 0], 2)


def test_elaborate_kron_preserves_meaning():
    rng = random.Random(8)
    for k in (2, 3):
        for _ in range(60):
            t = random_term(rng, k, rng.randint(1, 8), depth=3)
            e = elaborate_kron(t)
            assert not node_types(e) & {Kron, Scale}
            assert eval_term(e, k) == eval_term(t, k)


def test_gates_against_float_oracle():
    for k in (3, 4, 5):
        h = eval_term(gates.H(k), k).to_complex()
        assert close(h, ExactMatrix.from_entries(2, [[1, 1], [1, -1]]).to_complex() / 2**0.5, 1e-12)
        assert close(eval_term(gates.T(k), k).to_complex(), float_term(gates.T(k), k))
        s = eval_term(gates.S(k), k)
        assert s @ s == eval_term(gates.Z(k), k)
        assert eval_term(power(gates.T(k), 1 << (k - 2)), k) == s
        assert eval_term(gates.omega(k), k).entry(0, 0).unit_exponent() == 1 << (k - 3)


def test_gate_preconditions():
    with pytest.raises(PrecisionError):
        gates.H(2)
    with pytest.raises(PrecisionError):
        gates.omega(2)
    with pytest.raises(PrecisionError):
        gates.cphase(4, 3)
    with pytest.raises(PrecisionError):
        gates.cphase(1, 3)
    assert well_formed(gates.cphase(3, 3))[0] == 4
    assert gates.ctrl(V) == Sum(Id(2), V)


def test_compose_is_diagrammatic():
    k = 3
    a, b, c = V, gates.S(k), gates.T(k)
    assert eval_term(compose(a, b, c), k) == eval_term(c, k) @ eval_term(b, k) @ eval_term(a, k)

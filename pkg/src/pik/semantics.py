"""Interpretation of terms as exact unitary matrices, and the axiom/coherence checks."""

import random

from . import gates
from .errors import ShapeError, WellFormednessError
from .linalg import ExactMatrix, perm_matrix
from .report import Report
from .ring import check_precision, zeta_pow
from .term import Comp, Id, Kron, Scale, Sum, SwapPlus, V, VGate, X, Zeta, power, well_formed

DEFAULT_MAX_DIM = 1 << 12


def swap_perm(m, n):
    """Index map of the block symmetry m (+) n -> n (+) m."""
    return [j + n for j in range(m)] + [j - m for j in range(m, m + n)]


def v_matrix(k):
    i = zeta_pow(k, 1 << (k - 2))
    p, q = (1 + i).halve(), (1 - i).halve()
    return ExactMatrix.from_entries(k, [[p, q], [q, p]])


def eval_term(t, k, max_dim=DEFAULT_MAX_DIM):
    """The exact matrix denoted by t at precision level k."""
    check_precision(k)
    d = well_formed(t)[0]
    if d > max_dim:
        raise ShapeError(f"term dimension {d} exceeds the evaluation limit {max_dim}")
    cache = {"V": None}

    def go(u):
        if isinstance(u, Id):
            return ExactMatrix.identity(k, u.n)
        if isinstance(u, SwapPlus):
            return perm_matrix(swap_perm(u.m, u.n), k)
        if isinstance(u, Zeta):
            return ExactMatrix.scalar(zeta_pow(k, u.j))
        if isinstance(u, VGate):
            if cache["V"] is None:
                cache["V"] = v_matrix(k)
            return cache["V"]
        if isinstance(u, Comp):
            return go(u.g) @ go(u.f)
        if isinstance(u, Sum):
            return go(u.a).direct_sum(go(u.b))
        if isinstance(u, Kron):
            return go(u.a).kron(go(u.b))
        if isinstance(u, Scale):
            return go(u.t).scale_zeta(u.j)
        raise WellFormednessError(f"not a term: {u!r}")

    return go(t)


def check_axioms(k):
    """Report on the defining equations and the derived gate identities at level k."""
    check_precision(k)
    rep = Report("axioms", k)
    ev = lambda t: eval_term(t, k)  # noqa: E731
    S = gates.S(k)
    rep.record("V^2 = X", ev(Comp(V, V)) == ev(X))
    rep.record("VSV = SVS", ev(Comp(V, Comp(S, V))) == ev(Comp(S, Comp(V, S))))
    rep.record("zeta^(2^k) = 1", ev(power(Zeta(1), 1 << k)) == ev(Id(1)))
    rep.record("S^2 = Z", ev(Comp(S, S)) == ev(gates.Z(k)))
    rep.record("T^(2^(k-2)) = S", ev(power(gates.T(k), 1 << (k - 2))) == ev(S))
    if k >= 3:
        h = gates.H(k)
        rep.record("HH = id", ev(Comp(h, h)) == ev(Id(2)))
    for name, t in [("V", V), ("S", S), ("T", gates.T(k))] + ([("H", gates.H(k))] if k >= 3 else []):
        rep.record(f"{name} unitary", ev(t).is_unitary())
    return rep


def delta_l_perm(a, b, c):
    """Index map of a (x) (b (+) c) -> (a (x) b) (+) (a (x) c), left factor major."""
    p = []
    for x in range(a):
        for y in range(b + c):
            p.append(x * b + y if y < b else a * b + x * c + (y - b))
    return p


def _interchange(f, g):
    m, n = well_formed(f)[0], well_formed(g)[0]
    lhs = Comp(Kron(Id(m), g), Kron(f, Id(n)))
    rhs = Comp(Kron(f, Id(n)), Kron(Id(m), g))
    return lhs, rhs


def check_coherence(k, trials=100, seed=0, max_dim=4):
    """Randomised check of the two monoidal structures and how they interact."""
    from .randterm import random_term

    check_precision(k)
    rng = random.Random(seed)
    rep = Report("coherence", k, trials, seed)
    ev = lambda t: eval_term(t, k)  # noqa: E731
    for trial in range(trials):
        f = random_term(rng, k, rng.randint(1, max_dim))
        g = random_term(rng, k, rng.randint(1, max_dim))
        h = random_term(rng, k, rng.randint(1, max_dim))
        df, dg, dh = (well_formed(x)[0] for x in (f, g, h))

        rep.record("annihilation", well_formed(Kron(f, h))[0] == df * dh, {"trial": trial})

        lhs = Kron(Sum(f, g), h)
        rhs = Sum(Kron(f, h), Kron(g, h))
        rep.record("distributivity", ev(lhs) == ev(rhs), {"trial": trial})

        sq_l = ev(Kron(SwapPlus(df, dg), Id(dh)))
        sq_r = ev(SwapPlus(df * dh, dg * dh))
        rep.record("swap-compatibility", sq_l == sq_r, {"trial": trial})

        nat_l = ev(Comp(SwapPlus(df, dg), Sum(f, g)))
        nat_r = ev(Comp(Sum(g, f), SwapPlus(df, dg)))
        rep.record("swap-naturality", nat_l == nat_r, {"trial": trial})

        a, b = _interchange(f, g)
        rep.record("interchange", ev(a) == ev(b), {"trial": trial})

        dims = [rng.randint(1, 3) for _ in range(4)]
        rep.record("delta-four-summand", delta_diagram(k, *dims), {"trial": trial, "dims": dims})
    rep.record("delta-four-summand", delta_diagram(k, 2, 2, 2, 2), {"dims": [2, 2, 2, 2]})
    return rep


def delta_diagram(k, a, b, c, d):
    """Both ways of expanding (a (+) b) (x) (c (+) d) into four summands agree up to id (+) swap (+) id.

    Right distributivity is strict in the left-major layout, so only delta_l moves indices.
    """
    dl_a = perm_matrix(delta_l_perm(a, c, d), k)
    dl_b = perm_matrix(delta_l_perm(b, c, d), k)
    middle = ExactMatrix.identity(k, a * c).direct_sum(perm_matrix(swap_perm(a * d, b * c), k))
    middle = middle.direct_sum(ExactMatrix.identity(k, b * d))
    via_rows = middle @ dl_a.direct_sum(dl_b)
    via_cols = perm_matrix(delta_l_perm(a + b, c, d), k)
    return via_rows == via_cols

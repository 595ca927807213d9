"""Lowering precision by one level at the cost of one auxiliary qubit.

``phi(t, k)`` sends a level-k term on n wires to a level-(k-1) term on 2n
wires, laid out qubit-major (index ``s * n + x``). Conjugating its image by
the catalyst ``(H . T) (x) id_n`` recovers ``t (+) t*``.
"""

from . import gates
from .decide import eq
from .errors import PrecisionError
from .ring import check_precision
from .semantics import delta_l_perm, eval_term
from .tensor import elaborate_kron, perm_term
from .term import Comp, Id, Kron, Sum, SwapPlus, VGate, X, Zeta, compose, dim, lift_term, term_conj


def _inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def block_split(m, n):
    """2 (x) (m + n) -> (2 (x) m) (+) (2 (x) n), as a permutation term."""
    return perm_term(delta_l_perm(2, m, n))


def block_merge(m, n):
    return perm_term(_inverse(delta_l_perm(2, m, n)))


def phi(t, k):
    """The catalytic embedding from level k into level k-1."""
    check_precision(k, 3)
    modulus = 1 << k

    def go(u):
        if isinstance(u, Id):
            return Id(2 * u.n)
        if isinstance(u, SwapPlus):
            return Sum(u, u)
        if isinstance(u, VGate):
            return Sum(u, u)
        if isinstance(u, Zeta):
            j = u.j % modulus
            half = Sum(Zeta(j >> 1), Zeta(j >> 1))
            if j & 1:
                return Comp(half, Comp(X, Sum(Id(1), Zeta(1))))
            return half
        if isinstance(u, Comp):
            return Comp(go(u.g), go(u.f))
        if isinstance(u, Sum):
            m, n = dim(u.a), dim(u.b)
            return compose(block_split(m, n), Sum(go(u.a), go(u.b)), block_merge(m, n))
        raise PrecisionError(f"unexpected node after elaboration: {u!r}")

    return go(elaborate_kron(t))


def phi_iterate(t, k, to_k=2):
    """Apply phi repeatedly, from level k down to level to_k."""
    if to_k < 2 or to_k > k:
        raise PrecisionError(f"cannot lower from k={k} to k={to_k}")
    while k > to_k:
        t = phi(t, k)
        k -= 1
    return t


def catalyst(k, n):
    """(H . T) (x) id_n on 2n wires, qubit-major."""
    check_precision(k, 3)
    if n < 1:
        raise ValueError("catalyst needs n >= 1")
    return Kron(Comp(gates.H(k), gates.T(k)), Id(n))


def catalysis_sides(a, k):
    """Exact matrices of c . phi(a) . c^dagger and a (+) a*, both at level k."""
    n = dim(a)
    c = eval_term(catalyst(k, n), k)
    image = eval_term(lift_term(phi(a, k)), k)
    lhs = c @ image @ c.dagger()
    rhs = eval_term(Sum(a, term_conj(a, k)), k)
    return lhs, rhs


def catalysis_check(a, k):
    lhs, rhs = catalysis_sides(a, k)
    return lhs == rhs


def precision_transfer_check(a, b, k):
    """Equality at level k agrees with equality of the phi images at level k-1."""
    return eq(a, b, k) == eq(phi(a, k), phi(b, k), k - 1)


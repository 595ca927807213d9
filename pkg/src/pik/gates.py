"""Standard gates as terms at a fixed precision level k."""

from .errors import PrecisionError
from .ring import check_precision
from .term import Comp, Id, Scale, Sum, V, X, Zeta, dim, power

__all__ = ["X", "minus_one", "S", "Z", "T", "omega", "H", "ctrl", "cphase"]


def minus_one(k):
    check_precision(k)
    return Zeta(1 << (k - 1))


def S(k):
    """diag(1, i)."""
    check_precision(k)
    return Sum(Id(1), Zeta(1 << (k - 2)))


def Z(k):
    """diag(1, -1)."""
    return Sum(Id(1), minus_one(k))


def T(k):
    """diag(1, zeta_k)."""
    check_precision(k)
    return Sum(Id(1), Zeta(1))


def omega(k):
    """The eighth root of unity zeta_k^(2^(k-3))."""
    check_precision(k, 3)
    return Zeta(1 << (k - 3))


def H(k):
    """Hadamard: omega^7 . T^(2^(k-2)) V T^(2^(k-2))."""
    check_precision(k, 3)
    tp = power(T(k), 1 << (k - 2))
    return Scale(7 << (k - 3), Comp(tp, Comp(V, tp)))


def ctrl(t):
    """id (+) t: t applied when the control is in the second block."""
    return Sum(Id(dim(t)), t)


def cphase(d, k):
    """Controlled phase by 2 pi / 2^d on two qubits."""
    check_precision(k)
    if not 2 <= d <= k:
        raise PrecisionError(f"cphase({d}) requires 2 <= d <= k = {k}")
    return Sum(Id(3), Zeta(1 << (k - d)))

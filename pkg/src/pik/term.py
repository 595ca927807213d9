"""The program representation: generator terms and the structural operators on them.

Every term denotes an endomorphism of a natural-number object, so ``dom`` and
``cod`` always coincide. ``Comp(g, f)`` is the mathematical composite g after f.
"""

from dataclasses import dataclass
from functools import reduce

from .errors import WellFormednessError
from .ring import check_precision


class Term:
    __slots__ = ()

    @property
    def dim(self):
        return well_formed(self)[0]


@dataclass(frozen=True)
class Id(Term):
    n: int


@dataclass(frozen=True)
class SwapPlus(Term):
    """The block symmetry m (+) n -> n (+) m."""

    m: int
    n: int


@dataclass(frozen=True)
class Zeta(Term):
    """The scalar zeta^j : 1 -> 1."""

    j: int


@dataclass(frozen=True)
class VGate(Term):
    """The square root of NOT, 2 -> 2."""


V = VGate()
X = SwapPlus(1, 1)


@dataclass(frozen=True)
class Comp(Term):
    """g after f."""

    g: Term
    f: Term


@dataclass(frozen=True)
class Sum(Term):
    a: Term
    b: Term


@dataclass(frozen=True)
class Kron(Term):
    a: Term
    b: Term


@dataclass(frozen=True)
class Scale(Term):
    """zeta^j . t"""

    j: int
    t: Term


def _positive(n, what, path):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise WellFormednessError(f"{what} must be a positive integer, got {n!r}", path)


def well_formed(t, _path=()):
    """Return (dom, cod) of t or raise WellFormednessError naming the bad node."""
    if isinstance(t, Id):
        _positive(t.n, "id size", _path)
        return t.n, t.n
    if isinstance(t, SwapPlus):
        _positive(t.m, "swap block", _path)
        _positive(t.n, "swap block", _path)
        return t.m + t.n, t.m + t.n
    if isinstance(t, Zeta):
        if not isinstance(t.j, int):
            raise WellFormednessError("zeta exponent must be an integer", _path)
        return 1, 1
    if isinstance(t, VGate):
        return 2, 2
    if isinstance(t, Comp):
        gd, gc = well_formed(t.g, _path + ("g",))
        fd, fc = well_formed(t.f, _path + ("f",))
        if fc != gd:
            raise WellFormednessError(f"composition mismatch: inner term has codomain {fc}, outer expects {gd}", _path)
        return fd, gc
    if isinstance(t, Sum):
        ad, ac = well_formed(t.a, _path + ("a",))
        bd, bc = well_formed(t.b, _path + ("b",))
        return ad + bd, ac + bc
    if isinstance(t, Kron):
        ad, ac = well_formed(t.a, _path + ("a",))
        bd, bc = well_formed(t.b, _path + ("b",))
        return ad * bd, ac * bc
    if isinstance(t, Scale):
        return well_formed(t.t, _path + ("t",))
    raise WellFormednessError(f"not a term: {t!r}", _path)


def dim(t):
    return well_formed(t)[0]


def size(t):
    """Number of nodes."""
    stack, count = [t], 0
    while stack:
        u = stack.pop()
        count += 1
        if isinstance(u, Comp):
            stack += [u.g, u.f]
        elif isinstance(u, (Sum, Kron)):
            stack += [u.a, u.b]
        elif isinstance(u, Scale):
            stack.append(u.t)
    return count


def node_types(t):
    """Set of constructor classes occurring in t."""
    seen, stack = set(), [t]
    while stack:
        u = stack.pop()
        seen.add(type(u))
        if isinstance(u, Comp):
            stack += [u.g, u.f]
        elif isinstance(u, (Sum, Kron)):
            stack += [u.a, u.b]
        elif isinstance(u, Scale):
            stack.append(u.t)
    return seen


def compose(*terms):
    """Diagrammatic-order pipeline: compose(f, g, h) is h after g after f.

    The result is a balanced tree so that long pipelines stay shallow.
    """
    if not terms:
        raise ValueError("compose needs at least one term")
    if len(terms) == 1:
        return terms[0]
    mid = len(terms) // 2
    return Comp(compose(*terms[mid:]), compose(*terms[:mid]))


def direct_sum(*terms):
    return reduce(Sum, terms)


def pad(t, before, after):
    """id(before) (+) t (+) id(after), omitting empty identities."""
    if before:
        t = Sum(Id(before), t)
    if after:
        t = Sum(t, Id(after))
    return t


def power(t, n):
    if n < 1:
        raise ValueError("power needs n >= 1")
    return compose(*([t] * n))


def term_conj(t, k):
    """Syntactic conjugate: each zeta becomes -zeta, everything else is kept."""
    from .tensor import elaborate_kron

    check_precision(k)
    t = elaborate_kron(t)
    factor = (1 << (k - 1)) + 1
    modulus = 1 << k

    def go(u):
        if isinstance(u, Zeta):
            return Zeta((u.j * factor) % modulus)
        if isinstance(u, Comp):
            return Comp(go(u.g), go(u.f))
        if isinstance(u, Sum):
            return Sum(go(u.a), go(u.b))
        return u

    return go(t)


def term_dagger(t, k=None):
    """Syntactic inverse; V is inverted as V;V;V."""
    if isinstance(t, Id):
        return t
    if isinstance(t, SwapPlus):
        return SwapPlus(t.n, t.m)
    if isinstance(t, Zeta):
        return Zeta(-t.j)
    if isinstance(t, VGate):
        return Comp(V, Comp(V, V))
    if isinstance(t, Comp):
        return Comp(term_dagger(t.f), term_dagger(t.g))
    if isinstance(t, Sum):
        return Sum(term_dagger(t.a), term_dagger(t.b))
    if isinstance(t, Kron):
        return Kron(term_dagger(t.a), term_dagger(t.b))
    if isinstance(t, Scale):
        return Scale(-t.j, term_dagger(t.t))
    raise WellFormednessError(f"not a term: {t!r}")


def lift_term(t):
    """Reinterpret a level-k term at level k+1 (zeta_k = zeta_{k+1}^2)."""
    if isinstance(t, Zeta):
        return Zeta(2 * t.j)
    if isinstance(t, Scale):
        return Scale(2 * t.j, lift_term(t.t))
    if isinstance(t, Comp):
        return Comp(lift_term(t.g), lift_term(t.f))
    if isinstance(t, Sum):
        return Sum(lift_term(t.a), lift_term(t.b))
    if isinstance(t, Kron):
        return Kron(lift_term(t.a), lift_term(t.b))
    return t

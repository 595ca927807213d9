"""Deciding equality of terms: exactly, up to a global phase, and up to auxiliary summands."""

from dataclasses import dataclass

from .errors import ShapeError, WitnessError
from .ring import zeta_pow
from .semantics import eval_term
from .term import Comp, Id, Sum, Term, dim


def _matrices(t1, t2, k):
    d1, d2 = dim(t1), dim(t2)
    if d1 != d2:
        raise ShapeError(f"terms have different dimensions: {d1} and {d2}")
    return eval_term(t1, k), eval_term(t2, k)


def eq(t1, t2, k):
    a, b = _matrices(t1, t2, k)
    return a == b


@dataclass(frozen=True)
class PhaseWitness:
    """eval(t1) = zeta^j . eval(t2)."""

    j: int


def phase_between(a, b):
    """j in [0, 2^k) with a = zeta^j . b, or None."""
    k = a.k
    nz = None
    for i in range(b.rows):
        for c in range(b.cols):
            if b.data[i, c].any():
                nz = (i, c)
                break
        if nz:
            break
    if nz is None:
        return 0 if a.is_zero() else None
    x, y = a.entry(*nz), b.entry(*nz)
    for j in range(1 << k):
        if (y * zeta_pow(k, j)) == x:
            return j if b.scale_zeta(j) == a else None
    return None


def eq_up_to_phase(t1, t2, k):
    a, b = _matrices(t1, t2, k)
    j = phase_between(a, b)
    return None if j is None else PhaseWitness(j)


def decide_approx(t1, t2, k):
    """a ~ a' up to auxiliary summands; in the exact matrix model this is plain equality."""
    return eq(t1, t2, k)


@dataclass(frozen=True)
class ApproxWitness:
    """Evidence that lhs and rhs agree after adding auxiliary summands: lhs (+) b = rhs (+) b2."""

    lhs: Term
    rhs: Term
    b: Term
    b2: Term

    def verify(self, k):
        return dim(self.lhs) == dim(self.rhs) and eq(Sum(self.lhs, self.b), Sum(self.rhs, self.b2), k)

    def flip(self):
        return ApproxWitness(self.rhs, self.lhs, self.b2, self.b)


def reflexive_witness(t):
    return ApproxWitness(t, t, Id(1), Id(1))


def approx_witness_compose(w1, w2, k):
    """Paste a ~ a' (via b, b') and a' ~ a'' (via c', c'') into a ~ a''.

    a (+) b = a' (+) b' and a' (+) c' = a'' (+) c'' give, with all auxiliaries on
    a common object, a (+) (c' . b) = a'' (+) (c'' . b').
    """
    if not (w1.verify(k) and w2.verify(k)):
        raise WitnessError("input witness does not verify")
    if w1.rhs != w2.lhs and not eq(w1.rhs, w2.lhs, k):
        raise WitnessError("witnesses do not share their middle term")
    b, b1, c1, c2 = w1.b, w1.b2, w2.b, w2.b2
    if not (dim(b) == dim(b1) == dim(c1) == dim(c2)):
        raise WitnessError("auxiliary summands must share one object for pasting")
    out = ApproxWitness(w1.lhs, w2.rhs, Comp(c1, b), Comp(c2, b1))
    if not out.verify(k):
        raise WitnessError("pasted witness failed verification")
    return out

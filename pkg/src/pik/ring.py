"""Exact arithmetic in D[zeta_k] = Z[1/2, zeta_k], zeta_k a primitive 2^k-th root of unity.

An element is stored as ``(c_0 + c_1 z + ... + c_{L-1} z^{L-1}) / 2^e`` with
``L = 2^(k-1)`` and the relation ``z^L = -1``. The canonical form has ``e``
minimal, i.e. ``e == 0`` or some ``c_i`` odd, so equality is componentwise.
"""

import cmath
import math

from .errors import PrecisionError


def check_precision(k, minimum=2):
    if not isinstance(k, int) or isinstance(k, bool) or k < minimum:
        raise PrecisionError(f"precision level must be an integer >= {minimum}, got {k!r}")
    return k


def half_order(k):
    """Number of coefficients per element, 2^(k-1)."""
    return 1 << (k - 1)


def _trailing_zeros(x):
    return (x & -x).bit_length() - 1


def _canonical(coeffs, e):
    if e > 0:
        acc = 0
        for c in coeffs:
            acc |= c
        if acc == 0:
            return coeffs, 0
        shift = min(_trailing_zeros(acc), e)
        if shift:
            coeffs = tuple(c >> shift for c in coeffs)
            e -= shift
    return coeffs, e


class RingElem:
    """Immutable element of D[zeta_k]."""

    __slots__ = ("k", "den_exp", "coeffs", "_hash")

    def __init__(self, k, coeffs, den_exp=0):
        check_precision(k)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != half_order(k):
            raise ValueError(f"expected {half_order(k)} coefficients at k={k}, got {len(coeffs)}")
        if den_exp < 0:
            raise ValueError("den_exp must be non-negative")
        coeffs, den_exp = _canonical(coeffs, int(den_exp))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "den_exp", den_exp)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    # constructors

    @classmethod
    def from_int(cls, k, n, den_exp=0):
        coeffs = [0] * half_order(k)
        coeffs[0] = n
        return cls(k, coeffs, den_exp)

    @classmethod
    def zero(cls, k):
        return cls.from_int(k, 0)

    @classmethod
    def one(cls, k):
        return cls.from_int(k, 1)

    # predicates and protocol

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.k == other.k and self.den_exp == other.den_exp and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == RingElem.from_int(self.k, other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.k, self.den_exp, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"RingElem(k={self.k}, coeffs={list(self.coeffs)}, den_exp={self.den_exp})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        if self.den_exp:
            return f"({body})/2^{self.den_exp}"
        return body

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.k != self.k:
                raise PrecisionError(f"precision mismatch: {self.k} vs {other.k}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElem.from_int(self.k, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        e = max(self.den_exp, other.den_exp)
        sa, sb = e - self.den_exp, e - other.den_exp
        return RingElem(self.k, [(a << sa) + (b << sb) for a, b in zip(self.coeffs, other.coeffs)], e)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.k, [-c for c in self.coeffs], self.den_exp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = len(self.coeffs)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                s = i + j
                if s < n:
                    out[s] += a * b
                else:
                    out[s - n] -= a * b
        return RingElem(self.k, out, self.den_exp + other.den_exp)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for units; use zeta_pow")
        result = RingElem.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def halve(self, times=1):
        return RingElem(self.k, self.coeffs, self.den_exp + times)

    # automorphisms

    def galois_star(self):
        """The automorphism z -> -z."""
        return RingElem(self.k, [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.den_exp)

    def complex_conj(self):
        """The automorphism z -> z^-1, i.e. complex conjugation."""
        c = self.coeffs
        n = len(c)
        out = [0] * n
        out[0] = c[0]
        for i in range(1, n):
            out[n - i] = -c[i]
        return RingElem(self.k, out, self.den_exp)

    def lift(self, to_k):
        """The same value viewed in D[zeta_{to_k}], using zeta_k = zeta_{to_k}^(2^(to_k-k))."""
        check_precision(to_k)
        if to_k < self.k:
            raise PrecisionError(f"cannot lift from k={self.k} down to k={to_k}")
        step = 1 << (to_k - self.k)
        out = [0] * half_order(to_k)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return RingElem(to_k, out, self.den_exp)

    def unit_exponent(self):
        """Return j with self == zeta^j, or None if self is not a power of zeta."""
        if self.den_exp:
            return None
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            return None
        i, c = nz[0]
        return i if c == 1 else i + len(self.coeffs)

    def float_embed(self):
        n = 2 * len(self.coeffs)
        total = complex(0.0)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * cmath.exp(2j * math.pi * i / n)
        return total * 2.0 ** (-self.den_exp)

    # interchange

    def to_json(self):
        return {"k": self.k, "den_exp": self.den_exp, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["k"]), obj["coeffs"], int(obj.get("den_exp", 0)))


def ring_add(a, b):
    return a + b


def ring_mul(a, b):
    return a * b


def zeta_pow(k, j):
    """zeta_k^j, with j reduced mod 2^k."""
    check_precision(k)
    half = half_order(k)
    j %= 2 * half
    coeffs = [0] * half
    if j < half:
        coeffs[j] = 1
    else:
        coeffs[j - half] = -1
    return RingElem(k, coeffs)


def galois_star(a):
    return a.galois_star()


def complex_conj(a):
    return a.complex_conj()


def float_embed(a):
    return a.float_embed()


def ring_lift(a, to_k):
    return a.lift(to_k)


def inv_sqrt2(k):
    """1/sqrt(2) = (zeta^(2^(k-3)) + zeta^(-2^(k-3))) / 2, available for k >= 3."""
    check_precision(k, 3)
    q = 1 << (k - 3)
    return (zeta_pow(k, q) + zeta_pow(k, -q)).halve()

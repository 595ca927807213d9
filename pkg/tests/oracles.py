"""Independent reference computations used by the tests."""

import cmath
import math
from fractions import Fraction

import numpy as np

from pik.term import Comp, Id, Kron, Scale, Sum, SwapPlus, VGate, Zeta


def root(k, j=1):
    return cmath.exp(2j * math.pi * j / (1 << k))


def float_value(coeffs, den_exp, k):
    return sum(c * root(k, i) for i, c in enumerate(coeffs)) / 2**den_exp


def float_term(t, k):
    """Complex floating-point matrix of a term, computed without the exact layer."""
    if isinstance(t, Id):
        return np.eye(t.n, dtype=complex)
    if isinstance(t, SwapPlus):
        m, n = t.m, t.n
        out = np.zeros((m + n, m + n), dtype=complex)
        out[n:, :m] = np.eye(m)
        out[:n, m:] = np.eye(n)
        return out
    if isinstance(t, Zeta):
        return np.array([[root(k, t.j)]])
    if isinstance(t, VGate):
        return 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
    if isinstance(t, Comp):
        return float_term(t.g, k) @ float_term(t.f, k)
    if isinstance(t, Sum):
        a, b = float_term(t.a, k), float_term(t.b, k)
        out = np.zeros((a.shape[0] + b.shape[0],) * 2, dtype=complex)
        out[: a.shape[0], : a.shape[0]] = a
        out[a.shape[0] :, a.shape[0] :] = b
        return out
    if isinstance(t, Kron):
        return np.kron(float_term(t.a, k), float_term(t.b, k))
    if isinstance(t, Scale):
        return root(k, t.j) * float_term(t.t, k)
    raise TypeError(t)


def close(a, b, tol=1e-9):
    return a.shape == b.shape and np.abs(a - b).max() < tol


class Gauss:
    """Exact Gaussian rational, for k = 2 reference arithmetic."""

    def __init__(self, re, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        return Gauss(self.re + o.re, self.im + o.im)

    def __mul__(self, o):
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __eq__(self, o):
        return self.re == o.re and self.im == o.im

    @classmethod
    def of(cls, x):
        assert x.k == 2
        d = Fraction(1, 2**x.den_exp)
        return cls(x.coeffs[0] * d, x.coeffs[1] * d)


def transpose_index(m, n):
    """Brute force: position of grid cell (a, b) before and after transposing."""
    before = {(a, b): a * n + b for a in range(m) for b in range(n)}
    after = {(a, b): b * m + a for a in range(m) for b in range(n)}
    return [after[cell] for cell, _ in sorted(before.items(), key=lambda kv: kv[1])]


def dft(n):
    big = 1 << n
    w = cmath.exp(2j * math.pi / big)
    return np.array([[w ** (x * y) for x in range(big)] for y in range(big)]) / math.sqrt(big)

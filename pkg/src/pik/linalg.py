"""Dense exact matrices over D[zeta_k].

A matrix is held as an integer tensor of shape ``(rows, cols, L)``, the last
axis carrying the coefficients of ``1, z, ..., z^(L-1)``, together with one
shared denominator exponent. The shared exponent is kept minimal, which makes
matrix equality the same as entrywise canonical equality. Coefficients live in
``int64`` while provably small and fall back to Python integers otherwise.
"""

import math

import numpy as np

from .errors import PrecisionError, ShapeError
from .ring import RingElem, check_precision, half_order

_INT64_SAFE = 1 << 62


def _maxabs(data):
    if data.size == 0:
        return 0
    return int(np.abs(data).max())


def _shrink(data):
    """Return data as int64 when every coefficient fits comfortably."""
    if data.dtype == object and _maxabs(data) < _INT64_SAFE:
        return data.astype(np.int64)
    return data


def _widen(data):
    return data if data.dtype == object else data.astype(object)


def _canonicalise(data, e):
    if e == 0:
        return data, 0
    if data.dtype == object:
        acc = 0
        for c in data.flat:
            acc |= c
            if acc & 1:
                return data, e
        acc = int(acc)
    else:
        acc = int(np.bitwise_or.reduce(data, axis=None)) if data.size else 0
    if acc == 0:
        return np.zeros(data.shape, dtype=np.int64), 0
    shift = min((acc & -acc).bit_length() - 1, e)
    if shift:
        data = data >> shift if data.dtype != object else np.vectorize(lambda c: c >> shift, otypes=[object])(data)
        e -= shift
    return data, e


def _negacyclic_shift(t, a, length):
    """Multiply a coefficient tensor by z^a (0 <= a < length) under z^length = -1."""
    if a == 0:
        return t
    out = np.empty_like(t)
    out[..., a:] = t[..., : length - a]
    out[..., :a] = -t[..., length - a :]
    return out


class ExactMatrix:
    """Immutable matrix over D[zeta_k]."""

    __slots__ = ("k", "rows", "cols", "data", "den_exp", "_hash")

    def __init__(self, k, data, den_exp=0):
        check_precision(k)
        data = np.asarray(data)
        if data.ndim != 3 or data.shape[2] != half_order(k):
            raise ShapeError(f"coefficient tensor must have shape (rows, cols, {half_order(k)})")
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise ShapeError("matrix dimensions must be positive")
        if data.dtype != object and data.dtype != np.int64:
            data = data.astype(np.int64)
        data, den_exp = _canonicalise(_shrink(data), int(den_exp))
        data.setflags(write=False)
        self.k = k
        self.rows, self.cols = data.shape[0], data.shape[1]
        self.data = data
        self.den_exp = den_exp
        self._hash = None

    # constructors

    @classmethod
    def from_entries(cls, k, entries):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ShapeError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        flat = [e if isinstance(e, RingElem) else RingElem.from_int(k, e) for r in rows for e in r]
        if any(e.k != k for e in flat):
            raise PrecisionError("entry precision differs from matrix precision")
        e = max((x.den_exp for x in flat), default=0)
        data = np.empty((len(rows), width, half_order(k)), dtype=object)
        for idx, x in enumerate(flat):
            shift = e - x.den_exp
            data[idx // width, idx % width, :] = [c << shift for c in x.coeffs]
        return cls(k, data, e)

    @classmethod
    def zeros(cls, k, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(k, np.zeros((rows, cols, half_order(k)), dtype=np.int64))

    @classmethod
    def identity(cls, k, n):
        data = np.zeros((n, n, half_order(k)), dtype=np.int64)
        data[np.arange(n), np.arange(n), 0] = 1
        return cls(k, data)

    @classmethod
    def scalar(cls, x):
        return cls.from_entries(x.k, [[x]])

    # access

    @property
    def shape(self):
        return self.rows, self.cols

    def entry(self, i, j):
        return RingElem(self.k, self.data[i, j, :].tolist(), self.den_exp)

    @property
    def entries(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def is_zero(self):
        return not self.data.any()

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.k == other.k
            and self.shape == other.shape
            and self.den_exp == other.den_exp
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.shape, self.den_exp, tuple(self.data.ravel().tolist())))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix(k={self.k}, shape={self.shape}, den_exp={self.den_exp})"

    def _check_k(self, other):
        if self.k != other.k:
            raise PrecisionError(f"precision mismatch: {self.k} vs {other.k}")

    # arithmetic

    def _aligned(self, other):
        e = max(self.den_exp, other.den_exp)
        a, b = self.data, other.data
        sa, sb = e - self.den_exp, e - other.den_exp
        bound = (_maxabs(a) << sa) + (_maxabs(b) << sb)
        if bound >= _INT64_SAFE:
            a, b = _widen(a), _widen(b)
        if sa:
            a = a * (1 << sa) if a.dtype == object else a << sa
        if sb:
            b = b * (1 << sb) if b.dtype == object else b << sb
        return a, b, e

    def __add__(self, other):
        self._check_k(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        a, b, e = self._aligned(other)
        return ExactMatrix(self.k, a + b, e)

    def __neg__(self):
        return ExactMatrix(self.k, -self.data, self.den_exp)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check_k(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        length = half_order(self.k)
        a, b = self.data, other.data
        if _maxabs(a) * _maxabs(b) * self.cols * length >= _INT64_SAFE:
            a, b = _widen(a), _widen(b)
        out = np.zeros((self.rows, other.cols, length), dtype=a.dtype)
        for i in range(length):
            ai = a[:, :, i]
            if not ai.any():
                continue
            out += _negacyclic_shift(np.tensordot(ai, b, axes=([1], [0])), i, length)
        return ExactMatrix(self.k, out, self.den_exp + other.den_exp)

    def scale(self, x):
        """Multiply every entry by the ring element x."""
        if x.k != self.k:
            raise PrecisionError(f"precision mismatch: {self.k} vs {x.k}")
        length = half_order(self.k)
        d = self.data
        if _maxabs(d) * max(map(abs, x.coeffs)) * length >= _INT64_SAFE:
            d = _widen(d)
        out = np.zeros_like(d)
        for i, c in enumerate(x.coeffs):
            if c:
                out += c * _negacyclic_shift(d, i, length)
        return ExactMatrix(self.k, out, self.den_exp + x.den_exp)

    def scale_zeta(self, j):
        """Multiply every entry by zeta^j."""
        length = half_order(self.k)
        j %= 2 * length
        d = self.data
        if j >= length:
            d = -d
            j -= length
        return ExactMatrix(self.k, _negacyclic_shift(d, j, length), self.den_exp)

    def halve(self, times=1):
        return ExactMatrix(self.k, self.data, self.den_exp + times)

    # structure

    def direct_sum(self, other):
        self._check_k(other)
        a, b, e = self._aligned(other)
        dtype = object if object in (a.dtype, b.dtype) else np.int64
        out = np.zeros((self.rows + other.rows, self.cols + other.cols, half_order(self.k)), dtype=dtype)
        out[: self.rows, : self.cols] = a
        out[self.rows :, self.cols :] = b
        return ExactMatrix(self.k, out, e)

    def kron(self, other):
        """Kronecker product, left factor major."""
        self._check_k(other)
        length = half_order(self.k)
        a, b = self.data, other.data
        if _maxabs(a) * _maxabs(b) * length >= _INT64_SAFE:
            a, b = _widen(a), _widen(b)
        r1, c1 = self.shape
        r2, c2 = other.shape
        out = np.zeros((r1, r2, c1, c2, length), dtype=a.dtype)
        for i in range(length):
            ai = a[:, :, i]
            if not ai.any():
                continue
            t = ai[:, None, :, None, None] * b[None, :, None, :, :]
            out += _negacyclic_shift(t, i, length)
        return ExactMatrix(self.k, out.reshape(r1 * r2, c1 * c2, length), self.den_exp + other.den_exp)

    def transpose(self):
        return ExactMatrix(self.k, self.data.transpose(1, 0, 2), self.den_exp)

    def conj(self):
        """Entrywise complex conjugation, no transpose."""
        d = self.data
        return ExactMatrix(self.k, np.concatenate([d[..., :1], -d[..., :0:-1]], axis=-1), self.den_exp)

    def dagger(self):
        return self.conj().transpose()

    def star_entrywise(self):
        """Entrywise z -> -z, no transpose."""
        signs = np.ones(half_order(self.k), dtype=np.int64)
        signs[1::2] = -1
        return ExactMatrix(self.k, self.data * signs, self.den_exp)

    def submatrix(self, rows, cols):
        """Select a rectangular block; rows and cols are slices or index lists."""
        return ExactMatrix(self.k, self.data[rows][:, cols], self.den_exp)

    def lift(self, to_k):
        check_precision(to_k)
        if to_k < self.k:
            raise PrecisionError(f"cannot lift from k={self.k} down to k={to_k}")
        step = 1 << (to_k - self.k)
        out = np.zeros((self.rows, self.cols, half_order(to_k)), dtype=self.data.dtype)
        out[..., ::step] = self.data
        return ExactMatrix(to_k, out, self.den_exp)

    # predicates

    def is_square(self):
        return self.rows == self.cols

    def is_identity(self):
        return self.is_square() and self == ExactMatrix.identity(self.k, self.rows)

    def is_unitary(self):
        if not self.is_square():
            raise ShapeError(f"unitarity is only defined for square matrices, got {self.shape}")
        return (self @ self.dagger()).is_identity()

    # conversions

    def to_complex(self):
        """Floating-point image; diagnostics only, never used for equality."""
        length = half_order(self.k)
        roots = np.exp(2j * math.pi * np.arange(length) / (2 * length))
        return (self.data.astype(float) @ roots) * 2.0 ** (-self.den_exp)

    def to_json(self):
        return {
            "k": self.k,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj):
        k = int(obj["k"])
        entries = [[RingElem.from_json(x) for x in row] for row in obj["entries"]]
        m = cls.from_entries(k, entries)
        if ("rows" in obj and int(obj["rows"]) != m.rows) or ("cols" in obj and int(obj["cols"]) != m.cols):
            raise ShapeError("declared rows/cols disagree with the entries array")
        return m


def mat_mul(a, b):
    return a @ b


def direct_sum(a, b):
    return a.direct_sum(b)


def kron(a, b):
    return a.kron(b)


def dagger(a):
    return a.dagger()


def star_entrywise(a):
    return a.star_entrywise()


def is_unitary(a):
    return a.is_unitary()


def perm_matrix(p, k):
    """0/1 matrix sending basis vector j to basis vector p[j]."""
    p = list(p)
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {p}")
    data = np.zeros((n, n, half_order(k)), dtype=np.int64)
    data[p, np.arange(n), 0] = 1
    return ExactMatrix(k, data)

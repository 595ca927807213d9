"""Exact synthesis at k = 2: every unitary over Z[1/2, i] as a term.

Entries are rewritten over powers of delta = 1 + i, using 2 = -i delta^2. A
column whose entries need delta^f as common denominator has an even number
of entries not divisible by delta. Pairing them, fixing relative phases with
a power of i and mixing each pair with V^dagger lowers f by at least one. At
f = 0 the column is a single unit, which a swap and a phase move onto the
diagonal. Columns are cleared left to right; the term is the inverse of the
recorded reduction.
"""

from dataclasses import dataclass

from .errors import SynthesisCancelled, SynthesisError
from .linalg import ExactMatrix
from .semantics import eval_term
from .tensor import block_transposition
from .term import Comp, Id, Term, V, Zeta, compose, pad

K = 2


@dataclass(frozen=True)
class SynthesisResult:
    term: Term
    gate_count: int
    max_den_exp_seen: int


def _times_i(w, s):
    re, im = w
    for _ in range(s % 4):
        re, im = -im, re
    return re, im


def _odd(w):
    return (w[0] + w[1]) & 1


def _div_delta(w):
    # w / (1 + i) = w (1 - i) / 2
    return (w[0] + w[1]) >> 1, (w[1] - w[0]) >> 1


def _mul_delta(w):
    return w[0] - w[1], w[0] + w[1]


def _valuation(w):
    if w == (0, 0):
        return None
    v = 0
    while not _odd(w):
        w = _div_delta(w)
        v += 1
    return v


class _Work:
    """Matrix held as W / delta^F with Gaussian-integer W."""

    def __init__(self, u):
        n = u.rows
        e = u.den_exp
        self.n = n
        self.F = 2 * e
        self.W = [[_times_i((int(u.data[r, c, 0]), int(u.data[r, c, 1])), e) for c in range(n)] for r in range(n)]
        self.normalise()

    def normalise(self):
        while self.F > 0 and all(not _odd(w) for row in self.W for w in row):
            self.W = [[_div_delta(w) for w in row] for row in self.W]
            self.F -= 1

    def column_exponent(self, c):
        vals = [_valuation(self.W[r][c]) for r in range(self.n)]
        low = min(v for v in vals if v is not None)
        return max(self.F - low, 0)

    def scaled_column(self, c, f):
        """delta^f times column c, as Gaussian integers."""
        out = []
        for r in range(self.n):
            w = self.W[r][c]
            for _ in range(self.F - f):
                w = _div_delta(w)
            out.append(w)
        return out

    def phase(self, p, s):
        self.W[p] = [_times_i(w, s) for w in self.W[p]]

    def v_dagger(self, p, q):
        """Apply V^dagger to rows p, q: (a, b) -> ((a + i b) / delta, (i a + b) / delta)."""
        new_p = [(a[0] - b[1], a[1] + b[0]) for a, b in zip(self.W[p], self.W[q])]
        new_q = [(b[0] - a[1], b[1] + a[0]) for a, b in zip(self.W[p], self.W[q])]
        for r in range(self.n):
            if r not in (p, q):
                self.W[r] = [_mul_delta(w) for w in self.W[r]]
        self.W[p], self.W[q] = new_p, new_q
        self.F += 1
        self.normalise()

    def swap(self, p, q):
        self.W[p], self.W[q] = self.W[q], self.W[p]


def _phase_term(n, p, s):
    return pad(Zeta(s % 4), p, n - p - 1)


def _v_term(n, p, q):
    """V acting on coordinates p < q, identity elsewhere."""
    core = pad(V, p, n - p - 2)
    if q == p + 1:
        return core
    swap = block_transposition(p + 1, q, n)
    return Comp(swap, Comp(core, swap))


def _validate(u):
    if not isinstance(u, ExactMatrix):
        raise SynthesisError("synthesis input must be an ExactMatrix")
    if u.k != K:
        raise SynthesisError(f"synthesis works over Z[1/2, i] (k = 2), got k = {u.k}")
    if not u.is_square():
        raise SynthesisError(f"synthesis input must be square, got {u.shape}")
    if not u.is_unitary():
        raise SynthesisError("synthesis input is not unitary")


def synth(u, should_cancel=None):
    """A term over the k = 2 generators whose matrix is exactly u.

    ``should_cancel`` is polled between reduction steps; when it returns true
    the synthesis stops with SynthesisCancelled.
    """
    _validate(u)
    n = u.rows
    work = _Work(u)
    undo = []  # inverse of each applied step, in application order
    max_e = (work.F + 1) // 2

    def poll():
        if should_cancel is not None and should_cancel():
            raise SynthesisCancelled("synthesis cancelled")

    for c in range(n):
        while True:
            poll()
            f = work.column_exponent(c)
            max_e = max(max_e, (f + 1) // 2)
            col = work.scaled_column(c, f)
            if f == 0:
                break
            odd = [r for r in range(n) if _odd(col[r])]
            if not odd or len(odd) % 2 or odd[0] < c:
                raise SynthesisError("input is not unitary over Z[1/2, i]")
            for p, q in zip(odd[0::2], odd[1::2]):
                target = _times_i(col[q], 1)
                s = next(s for s in range(4) if _congruent_mod2(_times_i(col[p], s), target))
                if s:
                    work.phase(p, s)
                    undo.append(_phase_term(n, p, -s))
                work.v_dagger(p, q)
                undo.append(_v_term(n, p, q))
        units = [r for r in range(n) if col[r] != (0, 0)]
        if len(units) != 1 or units[0] < c:
            raise SynthesisError("input is not unitary over Z[1/2, i]")
        r = units[0]
        if r != c:
            work.swap(r, c)
            undo.append(block_transposition(c, r, n))
        w = col[r]
        s = next(s for s in range(4) if _times_i((1, 0), s) == w)
        if s:
            work.phase(c, -s)
            undo.append(_phase_term(n, c, s))

    term = compose(*reversed(undo)) if undo else Id(n)
    if eval_term(term, K) != u:
        raise SynthesisError("internal error: synthesised term does not reproduce the input")
    return SynthesisResult(term, len(undo), max_e)


def _congruent_mod2(a, b):
    return (a[0] - b[0]) % 2 == 0 and (a[1] - b[1]) % 2 == 0


def normalize(t, should_cancel=None):
    """Normal form of a k = 2 term: the synthesis of its matrix."""
    return synth(eval_term(t, K), should_cancel)

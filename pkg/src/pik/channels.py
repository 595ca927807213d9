"""Exact quantum channels between classical-quantum objects.

An object is a list of dimensions, one matrix algebra per classical outcome.
A channel keeps, for every (input block i, output block j), the linear map
from n_i x n_i to m_j x m_j matrices as an exact superoperator

    S[(x, y), (a, b)] = <x| F(|a><b|) |y>

with row-major vectorisation. The Choi block of the same map is

    J = sum_ab F(|a><b|) (x) |a><b|,   J[(x, a), (y, b)] = S[(x, y), (a, b)],

so the two hold the same numbers and are exchanged by an index reshuffle.
"""

import random
from dataclasses import dataclass

import numpy as np

from .decide import eq_up_to_phase
from .errors import ChannelError
from .linalg import ExactMatrix, perm_matrix
from .report import Report
from .ring import check_precision, half_order
from .randterm import random_term
from .semantics import eval_term
from .tensor import sigma_tensor, transpose_perm
from .term import Comp, Id, Kron, Scale, Sum, Term, X, dim, well_formed


@dataclass(frozen=True)
class CqObject:
    dims: tuple

    def __init__(self, dims):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise ChannelError(f"an object is a non-empty list of positive dimensions, got {list(dims)}")
        object.__setattr__(self, "dims", dims)

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    @property
    def total(self):
        return sum(self.dims)

    def __add__(self, other):
        return CqObject(self.dims + as_object(other).dims)

    def __mul__(self, other):
        other = as_object(other)
        return CqObject([a * b for a in self.dims for b in other.dims])

    def __repr__(self):
        return f"CqObject({list(self.dims)})"


def as_object(x):
    if isinstance(x, CqObject):
        return x
    if isinstance(x, int):
        return CqObject([x])
    return CqObject(x)


def choi_from_superop(s, n, m):
    """Reshuffle an (m^2 x n^2) superoperator into its (mn x mn) Choi block."""
    length = s.data.shape[2]
    d = s.data.reshape(m, m, n, n, length).transpose(0, 2, 1, 3, 4).reshape(m * n, m * n, length)
    return ExactMatrix(s.k, d, s.den_exp)


def superop_from_choi(j, n, m):
    length = j.data.shape[2]
    d = j.data.reshape(m, n, m, n, length).transpose(0, 2, 1, 3, 4).reshape(m * m, n * n, length)
    return ExactMatrix(j.k, d, j.den_exp)


def _vec(rho):
    n = rho.rows
    return ExactMatrix(rho.k, rho.data.reshape(n * n, 1, rho.data.shape[2]), rho.den_exp)


def _unvec(v, m):
    return ExactMatrix(v.k, v.data.reshape(m, m, v.data.shape[2]), v.den_exp)


class Channel:
    """Immutable channel dom -> cod at precision level k."""

    __slots__ = ("k", "dom", "cod", "blocks")

    def __init__(self, k, dom, cod, blocks):
        check_precision(k)
        dom, cod = as_object(dom), as_object(cod)
        if len(blocks) != len(dom) or any(len(row) != len(cod) for row in blocks):
            raise ChannelError("block grid does not match the objects")
        for i, n in enumerate(dom):
            for j, m in enumerate(cod):
                b = blocks[i][j]
                if b.shape != (m * m, n * n) or b.k != k:
                    raise ChannelError(f"block ({i}, {j}) has shape {b.shape}, expected {(m * m, n * n)}")
        self.k = k
        self.dom = dom
        self.cod = cod
        self.blocks = tuple(tuple(row) for row in blocks)

    @property
    def choi(self):
        """Choi blocks, indexed [input block][output block]."""
        return [
            [choi_from_superop(self.blocks[i][j], n, m) for j, m in enumerate(self.cod)]
            for i, n in enumerate(self.dom)
        ]

    @classmethod
    def from_choi(cls, k, dom, cod, choi):
        dom, cod = as_object(dom), as_object(cod)
        blocks = [[superop_from_choi(choi[i][j], n, m) for j, m in enumerate(cod)] for i, n in enumerate(dom)]
        return cls(k, dom, cod, blocks)

    def __eq__(self, other):
        if not isinstance(other, Channel):
            return NotImplemented
        return self.k == other.k and self.dom == other.dom and self.cod == other.cod and self.blocks == other.blocks

    __hash__ = None

    def __repr__(self):
        return f"Channel(k={self.k}, {list(self.dom.dims)} -> {list(self.cod.dims)})"

    def is_trace_preserving(self):
        for i, n in enumerate(self.dom):
            total = ExactMatrix.zeros(self.k, 1, n * n)
            for j, m in enumerate(self.cod):
                total = total + _trace_row(self.k, m) @ self.blocks[i][j]
            if total != _trace_row(self.k, n):
                return False
        return True


def _zero_block(k, n, m):
    return ExactMatrix.zeros(k, m * m, n * n)


def _trace_row(k, n):
    data = np.zeros((1, n * n, half_order(k)), dtype=np.int64)
    data[0, [a * n + a for a in range(n)], 0] = 1
    return ExactMatrix(k, data)


def _kraus_superop(kraus):
    out = None
    for w in kraus:
        s = w.kron(w.conj())
        out = s if out is None else out + s
    return out


def chan_from_kraus(k, kraus, dom=None, cod=None):
    """Single-block channel rho -> sum_i K_i rho K_i^dagger."""
    n, m = kraus[0].cols, kraus[0].rows
    return Channel(k, dom or [n], cod or [m], [[_kraus_superop(kraus)]])


def chan_identity(k, obj):
    obj = as_object(obj)
    blocks = [
        [ExactMatrix.identity(k, n * n) if i == j else _zero_block(k, n, m) for j, m in enumerate(obj)]
        for i, n in enumerate(obj)
    ]
    return Channel(k, obj, obj, blocks)


def chan_of_matrix(u):
    return chan_from_kraus(u.k, [u])


def chan_of_unitary(t, k):
    """rho -> U rho U^dagger for the matrix U of t; global phases cancel."""
    return chan_of_matrix(eval_term(t, k))


@dataclass(frozen=True)
class HugPresentation:
    """A channel m -> n presented by a unitary u on m + h = n * g wires.

    The first m coordinates carry the input (the heap h starts in its first
    block), and the output is read as n (x) g with the garbage g traced out.
    """

    m: int
    n: int
    h: int
    g: int
    u: Term

    def __post_init__(self):
        if min(self.m, self.n, self.g) < 1 or self.h < 0:
            raise ChannelError("hug sizes must be positive (heap may be 0)")
        if self.m + self.h != self.n * self.g:
            raise ChannelError(f"hug needs m + h = n * g, got {self.m} + {self.h} != {self.n} * {self.g}")
        d = well_formed(self.u)[0]
        if d != self.m + self.h:
            raise ChannelError(f"hug unitary acts on {d} wires, expected {self.m + self.h}")


def chan_from_hug(p, k):
    w = eval_term(p.u, k).submatrix(slice(None), slice(0, p.m))
    kraus = [w.submatrix(list(range(gamma, p.n * p.g, p.g)), slice(None)) for gamma in range(p.g)]
    return chan_from_kraus(k, kraus)


def chan_new(k):
    """Prepare a qubit in |0>: [1] -> [2]."""
    ket0 = ExactMatrix.from_entries(k, [[1], [0]])
    return chan_from_kraus(k, [ket0])


def chan_measure(a, b, k):
    """Which-block measurement [a + b] -> [a, b]."""
    if a < 1 or b < 1:
        raise ChannelError("measure needs positive block sizes")
    eye = ExactMatrix.identity(k, a + b)
    pa = eye.submatrix(slice(0, a), slice(None))
    pb = eye.submatrix(slice(a, a + b), slice(None))
    return Channel(k, [a + b], [a, b], [[_kraus_superop([pa]), _kraus_superop([pb])]])


def chan_discard(n, k):
    """Full trace [n] -> [1]."""
    if n < 1:
        raise ChannelError("discard needs n >= 1")
    return Channel(k, [n], [1], [[_trace_row(k, n)]])


def _same_k(*chans):
    ks = {c.k for c in chans}
    if len(ks) != 1:
        raise ChannelError(f"precision mismatch between channels: {sorted(ks)}")
    return ks.pop()


def chan_compose(g, f):
    """g after f."""
    k = _same_k(f, g)
    if f.cod != g.dom:
        raise ChannelError(f"cannot compose: {f.cod} != {g.dom}")
    blocks = []
    for i, n in enumerate(f.dom):
        row = []
        for l, m in enumerate(g.cod):
            acc = _zero_block(k, n, m)
            for j in range(len(f.cod)):
                acc = acc + g.blocks[j][l] @ f.blocks[i][j]
            row.append(acc)
        blocks.append(row)
    return Channel(k, f.dom, g.cod, blocks)


def chan_seq(*chans):
    """Diagrammatic composite: chan_seq(f, g) = g after f."""
    out = chans[0]
    for c in chans[1:]:
        out = chan_compose(c, out)
    return out


def chan_oplus(f, g):
    k = _same_k(f, g)
    dom, cod = f.dom + g.dom, f.cod + g.cod
    blocks = []
    for i, n in enumerate(dom):
        row = []
        for j, m in enumerate(cod):
            if i < len(f.dom) and j < len(f.cod):
                row.append(f.blocks[i][j])
            elif i >= len(f.dom) and j >= len(f.cod):
                row.append(g.blocks[i - len(f.dom)][j - len(f.cod)])
            else:
                row.append(_zero_block(k, n, m))
        blocks.append(row)
    return Channel(k, dom, cod, blocks)


def _tensor_superop(s1, s2, n1, m1, n2, m2):
    """Regroup kron(S1, S2) from ((x,y),(x',y')) to ((x,x'),(y,y')) on both sides."""
    raw = s1.kron(s2)
    length = raw.data.shape[2]
    d = raw.data.reshape(m1, m1, m2, m2, n1, n1, n2, n2, length)
    d = d.transpose(0, 2, 1, 3, 4, 6, 5, 7, 8).reshape(m1 * m1 * m2 * m2, n1 * n1 * n2 * n2, length)
    return ExactMatrix(raw.k, d, raw.den_exp)


def chan_tensor(f, g):
    """Parallel composite; blocks are ordered lexicographically, f's outcome major."""
    k = _same_k(f, g)
    blocks = []
    for i, n1 in enumerate(f.dom):
        for i2, n2 in enumerate(g.dom):
            row = []
            for j, m1 in enumerate(f.cod):
                for j2, m2 in enumerate(g.cod):
                    row.append(_tensor_superop(f.blocks[i][j], g.blocks[i2][j2], n1, m1, n2, m2))
            blocks.append(row)
    return Channel(k, f.dom * g.dom, f.cod * g.cod, blocks)


def chan_inj(side, a, b, k):
    """Coproduct injection a -> a + b (side 1) or b -> a + b (side 2)."""
    a, b = as_object(a), as_object(b)
    if side not in (1, 2):
        raise ChannelError("injection side must be 1 or 2")
    src = a if side == 1 else b
    offset = 0 if side == 1 else len(a)
    target = a + b
    blocks = [
        [ExactMatrix.identity(k, n * n) if j == i + offset else _zero_block(k, n, m) for j, m in enumerate(target)]
        for i, n in enumerate(src)
    ]
    return Channel(k, src, target, blocks)


def chan_copair(f, g):
    """Classical control: run f on the blocks of f.dom and g on those of g.dom."""
    k = _same_k(f, g)
    if f.cod != g.cod:
        raise ChannelError(f"copairing needs equal codomains, got {f.cod} and {g.cod}")
    return Channel(k, f.dom + g.dom, f.cod, list(f.blocks) + list(g.blocks))


def chan_block_perm(obj, p, k):
    """Relabel classical outcomes: block i of obj goes to position p[i]."""
    obj = as_object(obj)
    if sorted(p) != list(range(len(obj))):
        raise ChannelError(f"not a permutation of the blocks: {p}")
    cod = [0] * len(obj)
    for i, n in enumerate(obj):
        cod[p[i]] = n
    blocks = [
        [ExactMatrix.identity(k, n * n) if j == p[i] else _zero_block(k, n, m) for j, m in enumerate(cod)]
        for i, n in enumerate(obj)
    ]
    return Channel(k, obj, cod, blocks)


def chan_swap(a, b, k):
    """Symmetry [a] (x) [b] -> [b] (x) [a] for single-block objects."""
    return chan_of_matrix(perm_matrix(transpose_perm(a, b), k))


def chan_apply(f, states):
    """Push one density matrix per input block through f; returns one per output block."""
    if len(states) != len(f.dom):
        raise ChannelError(f"expected {len(f.dom)} input blocks, got {len(states)}")
    out = []
    for j, m in enumerate(f.cod):
        acc = ExactMatrix.zeros(f.k, m * m, 1)
        for i, rho in enumerate(states):
            if rho is None:
                continue
            if rho.shape != (f.dom[i], f.dom[i]):
                raise ChannelError(f"input block {i} must be {f.dom[i]}x{f.dom[i]}")
            acc = acc + f.blocks[i][j] @ _vec(rho)
        out.append(_unvec(acc, m))
    return out


def chan_eq(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise ChannelError(f"channels have different types: {f.dom}->{f.cod} and {g.dom}->{g.cod}")
    return f == g


# checks


def completeness_check(f, g, k):
    """Channel equality of two unitaries agrees with equality up to a global phase."""
    same_channel = chan_eq(chan_of_unitary(f, k), chan_of_unitary(g, k))
    return same_channel == (eq_up_to_phase(f, g, k) is not None)


def _qubit_term(rng, k, qubits):
    return random_term(rng, k, 1 << qubits)


def staton_suite(k, trials=50, seed=0):
    """Exact channel-level check of the quantum-computation axioms (A)-(L)."""
    check_precision(k)
    rng = random.Random(seed)
    rep = Report("staton", k, trials, seed)
    new, measure = chan_new(k), chan_measure(1, 1, k)
    one, two = chan_identity(k, [1]), chan_identity(k, [2])

    # instance-free axioms
    rep.record("A", chan_compose(measure, chan_of_unitary(X, k)) == chan_compose(chan_block_perm([1, 1], [1, 0], k), measure))
    rep.record("D", chan_compose(measure, new) == chan_inj(1, [1], [1], k))
    lhs_k = chan_seq(chan_tensor(one, new), chan_tensor(new, two))
    rhs_k = chan_seq(chan_tensor(new, one), chan_tensor(two, new))
    rep.record("K", lhs_k == rhs_k)
    lhs_l = chan_seq(chan_tensor(new, two), chan_tensor(two, measure))
    rhs_l = chan_seq(measure, chan_tensor(new, chan_identity(k, [1, 1])))
    rep.record("L", lhs_l == rhs_l)
    path_a = chan_seq(chan_tensor(two, measure), chan_oplus(chan_tensor(measure, one), chan_tensor(measure, one)))
    path_b = chan_seq(
        chan_tensor(measure, two),
        chan_oplus(chan_tensor(one, measure), chan_tensor(one, measure)),
        chan_block_perm([1, 1, 1, 1], [0, 2, 1, 3], k),
    )
    rep.record("J", path_a == path_b)

    for trial in range(trials):
        q = 1 + trial % 3
        d = 1 << q
        u, v = _qubit_term(rng, k, q), _qubit_term(rng, k, q)
        U = lambda t: chan_of_unitary(t, k)  # noqa: E731
        detail = {"trial": trial, "qubits": q}

        rep.record("C", chan_compose(chan_discard(d, k), U(u)) == chan_discard(d, k), detail)
        rep.record("G", U(Id(d)) == chan_identity(k, [d]), detail)
        rep.record("H", U(Comp(v, u)) == chan_compose(U(v), U(u)), detail)

        qa = rng.randint(1, max(1, q - 1)) if q > 1 else 1
        a, b = _qubit_term(rng, k, qa), _qubit_term(rng, k, max(q - qa, 1))
        da, db = dim(a), dim(b)
        rep.record("I", U(Kron(a, b)) == chan_tensor(U(a), U(b)), detail)
        rep.record("F", U(sigma_tensor(da, db)) == chan_swap(da, db, k), detail)
        rep.record(
            "F-naturality",
            chan_compose(chan_swap(da, db, k), chan_tensor(U(a), U(b))) == chan_compose(chan_tensor(U(b), U(a)), chan_swap(da, db, k)),
            detail,
        )

        # controlled pairs act on one control qubit and n = q - 1 target qubits
        n = max(q - 1, 1)
        cu, cv = _qubit_term(rng, k, n), _qubit_term(rng, k, n)
        dn = 1 << n
        mid = chan_identity(k, [dn])
        meas_id = chan_tensor(measure, mid)
        lhs_b = chan_compose(chan_oplus(U(cu), U(cv)), meas_id)
        rhs_b = chan_compose(meas_id, U(Sum(cu, cv)))
        rep.record("B", lhs_b == rhs_b, detail)
        lhs_e = chan_compose(U(Sum(cu, cv)), chan_tensor(new, mid))
        rhs_e = chan_tensor(new, U(cu))
        rep.record("E", lhs_e == rhs_e, detail)
    return rep


def phase_squash_check(t, k):
    """chan_of_unitary(scale(j, t)) = chan_of_unitary(t) for every j in [0, 2^k)."""
    base = chan_of_unitary(t, k)
    return all(chan_of_unitary(Scale(j, t), k) == base for j in range(1 << k))

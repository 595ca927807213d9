"""Quantum Fourier transform circuits and their precision accounting.

Qubits are numbered most significant first: on 2^n wires, basis index x has
qubit 0 as its leading bit. The final swap layer is included, so the matrix
of ``build_qft(n, k)`` is exactly ``w^(xy) / sqrt(2^n)`` with ``w`` a
primitive 2^n-th root of unity.
"""

from dataclasses import asdict, dataclass

from . import gates
from .errors import PrecisionError
from .ring import check_precision
from .tensor import perm_term
from .term import Id, Kron, Sum, Zeta, compose


@dataclass(frozen=True)
class QftStats:
    n: int
    k: int
    h_count: int
    native_cp: int
    approx_cp: int
    swap_count: int

    def to_json(self):
        return asdict(self)


def _embed(block, first, width, n):
    """Place a gate on qubits first .. first + width - 1 of an n-qubit register."""
    t = block
    if first:
        t = Kron(Id(1 << first), t)
    rest = n - first - width
    if rest:
        t = Kron(t, Id(1 << rest))
    return t


def _phase(d, k):
    return Sum(Id(1), Zeta(1 << (k - d)))


def controlled_phase(q, j, d, n, k):
    """Phase 2 pi / 2^d when qubits q < j are both 1."""
    if j == q + 1:
        return _embed(gates.cphase(d, k), q, 2, n)
    gap = j - q - 1
    block = gates.ctrl(Kron(Id(1 << gap), _phase(d, k)))
    return _embed(block, q, gap + 2, n)


def bit_reversal(n):
    return [int(format(x, f"0{n}b")[::-1], 2) if n else 0 for x in range(1 << n)]


def build_qft(n, k):
    """The n-qubit Fourier transform at level k; needs n <= k so every phase is native."""
    check_precision(k, 3)
    if n < 1:
        raise ValueError("build_qft needs n >= 1")
    if n > k:
        raise PrecisionError(
            f"QFT on {n} qubits needs phases 2 pi / 2^{n}, which require approximation at k = {k}; out of scope"
        )
    h = gates.H(k)
    steps = []
    for q in range(n):
        steps.append(_embed(h, q, 1, n))
        for j in range(q + 1, n):
            steps.append(controlled_phase(q, j, j - q + 1, n, k))
    if n > 1:
        steps.append(perm_term(bit_reversal(n)))
    return compose(*steps)


def qft_stats(n, k):
    """Gate counts of the n-qubit QFT at level k, counting each controlled phase by its angle."""
    if n < 1:
        raise ValueError("qft_stats needs n >= 1")
    check_precision(k)
    native = approx = 0
    for q in range(n):
        for j in range(q + 1, n):
            if j - q + 1 <= k:
                native += 1
            else:
                approx += 1
    return QftStats(n=n, k=k, h_count=n, native_cp=native, approx_cp=approx, swap_count=n // 2)

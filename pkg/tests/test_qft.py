from math import comb

import pytest

from oracles import close, dft
from pik import gates
from pik.errors import PrecisionError
from pik.linalg import ExactMatrix, perm_matrix
from pik.qft import bit_reversal, build_qft, qft_stats
from pik.ring import inv_sqrt2, zeta_pow
from pik.semantics import eval_term


def ring_dft(n, k):
    big = 1 << n
    scale = inv_sqrt2(k) ** n
    return ExactMatrix.from_entries(k, [[scale * zeta_pow(k, x * y << (k - n)) for x in range(big)] for y in range(big)])


def test_one_qubit_is_hadamard():
    assert build_qft(1, 4) == gates.H(4)


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (3, 3), (2, 5), (4, 4)])
def test_matches_dft(n, k):
    m = eval_term(build_qft(n, k), k)
    assert m == ring_dft(n, k)
    assert close(m.to_complex(), dft(n), 1e-12)
    assert m.is_unitary()


def test_diagonalises_shift():
    for n in (1, 2, 3):
        k = 3
        big = 1 << n
        f = eval_term(build_qft(n, k), k)
        shift = perm_matrix([(x + 1) % big for x in range(big)], k)
        d = f @ shift @ f.dagger()
        diag = [[zeta_pow(k, y << (k - n)) if x == y else 0 for x in range(big)] for y in range(big)]
        assert d == ExactMatrix.from_entries(k, diag)


def test_refuses_non_native_phases():
    with pytest.raises(PrecisionError):
        build_qft(4, 3)
    with pytest.raises(PrecisionError):
        build_qft(1, 2)


def test_stats_examples():
    assert qft_stats(5, 4).approx_cp == 1
    assert qft_stats(5, 3).approx_cp == 3
    s = qft_stats(6, 6)
    assert s.approx_cp == 0 and s.native_cp == 15 and s.h_count == 6 and s.swap_count == 3


def test_stats_invariants_exhaustive():
    for n in range(1, 13):
        for k in range(2, 13):
            s = qft_stats(n, k)
            assert s.native_cp + s.approx_cp == n * (n - 1) // 2
            assert s.approx_cp == (comb(n - k + 1, 2) if n > k else 0)
            assert s.h_count == n and s.swap_count == n // 2


def test_bit_reversal():
    assert bit_reversal(3) == [0, 4, 2, 6, 1, 5, 3, 7]

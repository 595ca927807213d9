"""Reconstructing the tensor product from sums and block swaps."""

from .term import Comp, Id, Kron, Scale, Sum, SwapPlus, Zeta, compose, dim, X


def n_fold_sum(t, n):
    """t (+) t (+) ... (+) t, n copies, associated to the left."""
    if n < 1:
        raise ValueError(f"n_fold_sum needs n >= 1, got {n}")
    out = t
    for _ in range(n - 1):
        out = Sum(out, t)
    return out


def _layer(n, swaps):
    """Sum of X blocks at positions (i, i+1) for i in swaps, identities elsewhere."""
    blocks, run, i = [], 0, 0
    while i < n:
        if i in swaps:
            if run:
                blocks.append(Id(run))
                run = 0
            blocks.append(X)
            i += 2
        else:
            run += 1
            i += 1
    if run:
        blocks.append(Id(run))
    out = blocks[0]
    for b in blocks[1:]:
        out = Sum(out, b)
    return out


def perm_term(p):
    """A term over {Id, SwapPlus, Sum, Comp} sending basis vector j to p[j].

    Built as an odd-even transposition sort: each layer swaps disjoint
    adjacent pairs, and at most len(p) layers are needed.
    """
    p = list(p)
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {p}")
    # targets[pos] = where the token currently at pos must end up
    targets = list(p)
    layers = []
    parity = 0
    clean_rounds = 0
    while clean_rounds < 2:
        swaps = set()
        for i in range(parity, n - 1, 2):
            if targets[i] > targets[i + 1]:
                targets[i], targets[i + 1] = targets[i + 1], targets[i]
                swaps.add(i)
        if swaps:
            layers.append(_layer(n, swaps))
            clean_rounds = 0
        else:
            clean_rounds += 1
        parity ^= 1
    if not layers:
        return Id(n)
    return compose(*layers)


def transpose_perm(m, n):
    """Index map of the lexicographic transpose m x n -> n x m: (a, b) -> (b, a)."""
    return [b * m + a for a in range(m) for b in range(n)]


def sigma_tensor(m, n):
    """The multiplicative symmetry m (x) n -> n (x) m, as a pure sum-fragment term."""
    if m < 1 or n < 1:
        raise ValueError("sigma_tensor needs positive sizes")
    if m == 1 or n == 1:
        return Id(m * n)
    return perm_term(transpose_perm(m, n))


def block_transposition(a, b, n):
    """Term on n wires exchanging positions a and b, identity elsewhere."""
    if a == b:
        return Id(n)
    a, b = min(a, b), max(a, b)
    width = b - a + 1
    if width == 2:
        core = X
    else:
        core = Comp(Sum(SwapPlus(width - 2, 1), Id(1)), SwapPlus(1, width - 1))
    if a:
        core = Sum(Id(a), core)
    if n - b - 1:
        core = Sum(core, Id(n - b - 1))
    return core


def kron_from_sums(a, b):
    """a (x) b rewritten as sigma . (a (+) ... (+) a) . sigma . (b (+) ... (+) b)."""
    m, n = dim(a), dim(b)
    if a == Id(1):
        return b
    if b == Id(1):
        return a
    if m == 1:
        return Comp(n_fold_sum(a, n), b)
    if n == 1:
        return Comp(a, n_fold_sum(b, m))
    return compose(n_fold_sum(b, m), sigma_tensor(m, n), n_fold_sum(a, n), sigma_tensor(n, m))


def elaborate_kron(t):
    """Eliminate every Kron and Scale node without changing the denotation."""
    if isinstance(t, Kron):
        return kron_from_sums(elaborate_kron(t.a), elaborate_kron(t.b))
    if isinstance(t, Scale):
        inner = elaborate_kron(t.t)
        return Comp(n_fold_sum(Zeta(t.j), dim(inner)), inner)
    if isinstance(t, Comp):
        return Comp(elaborate_kron(t.g), elaborate_kron(t.f))
    if isinstance(t, Sum):
        return Sum(elaborate_kron(t.a), elaborate_kron(t.b))
    return t

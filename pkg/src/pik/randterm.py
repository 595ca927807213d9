"""Seeded generators of random well-formed terms for the property suites."""

from . import gates
from .term import Comp, Id, Kron, Scale, Sum, SwapPlus, V, X, Zeta, term_dagger


def _leaf(rng, k, n):
    if n == 1:
        return Zeta(rng.randrange(1 << k))
    if n == 2:
        pool = [V, X, gates.S(k), gates.T(k), Id(2), Sum(Zeta(rng.randrange(1 << k)), Zeta(rng.randrange(1 << k)))]
        if k >= 3:
            pool.append(gates.H(k))
        return rng.choice(pool)
    m = rng.randint(1, n - 1)
    return rng.choice([SwapPlus(m, n - m), Id(n)])


def random_term(rng, k, n, depth=3, kron=True, scale=True):
    """A random term of dimension n built from at most ``depth`` levels of combinators."""
    if depth <= 0:
        return _leaf(rng, k, n)
    options = ["leaf", "comp", "comp"]
    if n >= 2:
        options += ["sum", "sum"]
    factors = [d for d in range(2, n) if n % d == 0]
    if kron and factors:
        options.append("kron")
    if scale:
        options.append("scale")
    choice = rng.choice(options)
    sub = lambda m: random_term(rng, k, m, depth - 1, kron, scale)  # noqa: E731
    if choice == "comp":
        return Comp(sub(n), sub(n))
    if choice == "sum":
        m = rng.randint(1, n - 1)
        return Sum(sub(m), sub(n - m))
    if choice == "kron":
        d = rng.choice(factors)
        return Kron(sub(d), sub(n // d))
    if choice == "scale":
        return Scale(rng.randrange(1 << k), sub(n))
    return _leaf(rng, k, n)


def random_generator_term(rng, k, n, depth=3):
    """Random term over the generator grammar only (no Kron or Scale nodes)."""
    return random_term(rng, k, n, depth, kron=False, scale=False)


def equal_variant(rng, k, t):
    """A syntactically different term with the same denotation as t."""
    from .term import dim

    n = dim(t)
    u = random_term(rng, k, n, 2)
    rewrites = [
        lambda: Comp(t, Comp(term_dagger(u), u)),
        lambda: Comp(Comp(u, term_dagger(u)), t),
        lambda: Comp(Id(n), t),
        lambda: Comp(t, Id(n)),
        lambda: Scale(1 << k, t),
        lambda: Comp(Scale(1, t), Scale((1 << k) - 1, Id(n))),
    ]
    if n >= 2:
        m = rng.randint(1, n - 1)
        rewrites.append(lambda: Comp(SwapPlus(n - m, m), Comp(SwapPlus(m, n - m), t)))
    return rng.choice(rewrites)()

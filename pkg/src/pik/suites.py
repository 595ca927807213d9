"""Named randomised check suites, as run by ``pik suite``."""

import random

from .catalytic import catalysis_check, precision_transfer_check
from .channels import completeness_check, phase_squash_check, staton_suite
from .randterm import equal_variant, random_term
from .report import Report
from .ring import check_precision
from .semantics import check_axioms, check_coherence
from .term import Scale, V, X, Zeta, dim

SUITES = ("axioms", "coherence", "catalysis", "staton", "completeness")


def catalysis_suite(k, trials=200, seed=0, max_dim=8):
    check_precision(k, 3)
    rng = random.Random(seed)
    rep = Report("catalysis", k, trials, seed)
    for name, t in (("zeta", Zeta(1)), ("V", V)):
        rep.record(f"catalysis {name}", catalysis_check(t, k))
    for trial in range(trials):
        a = random_term(rng, k, rng.randint(1, max_dim))
        rep.record("catalysis", catalysis_check(a, k), {"trial": trial})
        b = equal_variant(rng, k, a) if trial % 2 else random_term(rng, k, dim(a))
        rep.record("precision transfer", precision_transfer_check(a, b, k), {"trial": trial})
    return rep


def completeness_suite(k, trials=200, seed=0, max_dim=4):
    check_precision(k)
    rng = random.Random(seed)
    rep = Report("completeness", k, trials, seed)
    rep.record("V vs X", completeness_check(V, X, k))
    for trial in range(trials):
        f = random_term(rng, k, rng.randint(1, max_dim))
        mode = trial % 3
        if mode == 0:
            g = Scale(rng.randrange(1 << k), f)
        elif mode == 1:
            g = Scale(rng.randrange(1 << k), equal_variant(rng, k, f))
        else:
            g = random_term(rng, k, dim(f))
        rep.record("channel equality iff phase equality", completeness_check(f, g, k), {"trial": trial})
        if trial < 10:
            rep.record("phase squashing", phase_squash_check(f, k), {"trial": trial})
    return rep


def run_suite(name, k, trials=None, seed=0):
    if name == "axioms":
        rep = check_axioms(k)
        rep.seed = seed
        return rep
    if name == "coherence":
        return check_coherence(k, 100 if trials is None else trials, seed)
    if name == "catalysis":
        return catalysis_suite(k, 200 if trials is None else trials, seed)
    if name == "staton":
        return staton_suite(k, 50 if trials is None else trials, seed)
    if name == "completeness":
        return completeness_suite(k, 200 if trials is None else trials, seed)
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")

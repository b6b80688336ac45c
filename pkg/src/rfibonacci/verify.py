"""Bounded runs of every identity, returning :class:`~rfibonacci.identities.Report` objects.

Each ``check_*`` function is self-contained and deterministic for a given
seed. :func:`run_all` executes them in a fixed order.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial

from . import exactnum as ex
from .fibpoly import fib_matrix, fib_multinomial, fib_recursive, omega, partitions_bounded
from .identities import (
    Report,
    bell_complete_ordinary,
    bell_partial_exponential,
    cassini_check,
    cassini_matrix,
    exp_bell_fib_identity_check,
    fubini_stirling_check,
    poly_determinant,
)
from .mpoly import MPoly, variable
from .numericbinet import binet_sweep
from .series import (
    decay_probe,
    fib_genfun_coefficients,
    fubini_restricted,
    infinite_variate_coefficients,
    preference_polynomial,
)

ENUMERATION_MAX_N = 8
PREFERENCE_MAX_N = 7
BELL_MAX_N = 10
STIRLING_MAX_N = 12


def check_cross_path(max_r, max_n, seed):
    for r in range(1, max_r + 1):
        for n in range(0, max_n + 1):
            a = fib_recursive(r, n)
            if a != fib_multinomial(r, n) or (n >= r - 1 and a != fib_matrix(r, n)):
                return Report("cross_path_construction", {"r": r, "n": n}, False)
    return Report("cross_path_construction", {"max_r": max_r, "max_n": max_n})


def check_genfun_expansion(max_r, max_n, seed):
    x1, x2, x3 = (variable(3, i) for i in (1, 2, 3))
    expected = [MPoly.constant(3, 1), x1, x1 * x1 + x2, x1 ** 3 + 2 * x1 * x2 + x3]
    got = fib_genfun_coefficients(3, 3)
    residual = next((g - e for g, e in zip(got, expected) if g != e), None)
    return Report("genfun_expansion_r3", {"order": 3}, residual is None, residual)


def check_cassini(max_r, max_n, seed):
    for r in range(2, max_r + 1):
        for n in range(2 * r - 2, max(2 * r - 2, min(2 * r + 8, max_n)) + 1):
            holds, residual = cassini_check(r, n)
            if not holds:
                return Report("cassini", {"r": r, "n": n}, False, residual)
    return Report("cassini", {"max_r": max_r, "max_n": max_n}, True, MPoly(max(2, max_r)))


def check_cassini_fibonacci(max_r, max_n, seed):
    for n in range(2, max_n + 1):
        det = poly_determinant(cassini_matrix(2, n)).specialize({2: 1})
        expected = MPoly.constant(2, (-1) ** n)
        if det != expected:
            return Report("cassini_fibonacci_specialization", {"n": n}, False, det - expected)
        f = ex.fibonacci_num
        if n >= 3 and f(n - 1) ** 2 - f(n) * f(n - 2) != (-1) ** n:
            return Report("cassini_fibonacci_specialization", {"n": n}, False)
    return Report("cassini_fibonacci_specialization", {"max_n": max_n}, True, MPoly(2))


def check_partitions(max_r, max_n, seed):
    for r in range(1, max_r + 1):
        for n in range(r, max_n + 1):
            if omega(fib_recursive(r, n)) != partitions_bounded(n - r + 1, r):
                return Report("partition_characterization", {"r": r, "n": n}, False)
    return Report("partition_characterization", {"max_r": max_r, "max_n": max_n})


def check_multinomial_coefficients(max_r, max_n, seed):
    for r in range(1, max_r + 1):
        for n in range(0, max_n + 1):
            for exp, c in fib_recursive(r, n).terms:
                if c != ex.multinomial(exp):
                    return Report("multinomial_coefficients", {"r": r, "n": n}, False)
    return Report("multinomial_coefficients", {"max_r": max_r, "max_n": max_n})


def check_homogeneity(max_r, max_n, seed):
    for r in range(1, max_r + 1):
        for n in range(r - 1, min(max_n, r + 12) + 1):
            if fib_recursive(r, n).substitute_power_scaling().is_homogeneous() != n - r + 1:
                return Report("power_scaling_homogeneity", {"r": r, "n": n}, False)
    return Report("power_scaling_homogeneity", {"max_r": max_r, "max_n": max_n})


def check_genfun(max_r, max_n, seed):
    order = min(15, max_n)
    for r in range(1, max_r + 1):
        for n, c in enumerate(fib_genfun_coefficients(r, order)):
            if c != fib_recursive(r, n + r - 1):
                return Report("genfun_r_fibonacci", {"r": r, "n": n}, False, c - fib_recursive(r, n + r - 1))
    return Report("genfun_r_fibonacci", {"max_r": max_r, "order": order})


def check_infinite_variate(max_r, max_n, seed, trials=20, order=10):
    rng = random.Random(seed)
    for t in range(trials):
        c = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order)]
        coeffs = infinite_variate_coefficients(c, order)
        for n in range(1, order + 1):
            if coeffs[n] != fib_recursive(n, 2 * n - 1).evaluate(c[:n]):
                return Report("genfun_infinite_variate", {"trial": t, "n": n}, False)
    return Report("genfun_infinite_variate", {"trials": trials, "order": order, "seed": seed})


def check_pell(max_r, max_n, seed, order=12):
    fib = [ex.fibonacci_num(k) for k in range(1, order + 1)]
    coeffs = infinite_variate_coefficients(fib, order)
    holds = all(coeffs[n] == ex.pell(n) for n in range(1, order + 1))
    return Report("pell_coefficients", {"order": order}, holds)


def check_fubini_restricted(max_r, max_n, seed):
    top = min(ENUMERATION_MAX_N, max_n)
    for n in range(0, top + 1):
        for r in range(1, max_r + 1):
            if fubini_restricted(n, r) != ex.fubini_restricted_bruteforce(n, r):
                return Report("fubini_restricted", {"n": n, "r": r}, False)
        if fubini_restricted(n, max(n, 1)) != ex.fubini(n):
            return Report("fubini_restricted", {"n": n, "r": n}, False)
    return Report("fubini_restricted", {"max_r": max_r, "max_n": top})


def check_fubini_stirling(max_r, max_n, seed):
    top = STIRLING_MAX_N
    holds = all(fubini_stirling_check(n) for n in range(1, top + 1))
    return Report("fubini_stirling", {"max_n": top}, holds)


def check_preference(max_r, max_n, seed):
    top = min(PREFERENCE_MAX_N, max_n)
    for r in range(1, max_r + 1):
        for n in range(1, top + 1):
            counts = ex.preference_ordering_profile_counts(n, r)
            poly = preference_polynomial(n, r)
            got = {ex.PartitionProfile(e): c for e, c in poly.terms}
            if got != {p: Fraction(v) for p, v in counts.items()}:
                return Report("preference_orderings", {"n": n, "r": r}, False)
    return Report("preference_orderings", {"max_r": max_r, "max_n": top})


def check_bell_complete(max_r, max_n, seed):
    for n in range(1, BELL_MAX_N + 1):
        if bell_complete_ordinary(n) != fib_recursive(n, 2 * n - 1):
            return Report("bell_complete_ordinary", {"n": n}, False,
                          bell_complete_ordinary(n) - fib_recursive(n, 2 * n - 1))
    return Report("bell_complete_ordinary", {"max_n": BELL_MAX_N})


def check_bell_truncation(max_r, max_n, seed):
    for n in range(1, BELL_MAX_N + 1):
        b = bell_complete_ordinary(n)
        for r in range(1, max_r + 1):
            ambient = max(n, r)
            lhs = b.truncate_variables(r).embed(ambient)
            rhs = fib_recursive(r, n + r - 1).embed(ambient)
            if lhs != rhs:
                return Report("bell_truncation", {"n": n, "r": r}, False, lhs - rhs)
    return Report("bell_truncation", {"max_n": BELL_MAX_N, "max_r": max_r})


def check_exp_bell(max_r, max_n, seed):
    for n in range(1, ENUMERATION_MAX_N + 1):
        for r in range(1, max_r + 1):
            if not exp_bell_fib_identity_check(n, r):
                return Report("exp_bell_identity", {"n": n, "r": r}, False)
    return Report("exp_bell_identity", {"max_n": ENUMERATION_MAX_N, "max_r": max_r})


def check_bell_stirling(max_r, max_n, seed):
    for n in range(1, ENUMERATION_MAX_N + 1):
        for k in range(1, n + 1):
            if bell_partial_exponential(n, k).evaluate([1] * n) != ex.stirling2(n, k):
                return Report("bell_stirling", {"n": n, "k": k}, False)
    return Report("bell_stirling", {"max_n": ENUMERATION_MAX_N})


def check_numeric_binet(max_r, max_n, seed):
    stats = binet_sweep(seed=seed, points=100, max_r=5, max_n=30)
    holds = stats.worst() <= 1e-8 and stats.identity_error <= 1e-8 and stats.degenerate_fraction < 0.05
    return Report("numeric_binet", {"seed": seed, **stats.as_dict()}, holds)


DECAY_CASES = ((3, (0.3, 0.3, 0.3)), (2, (0.1, 0.1)))


def check_decay(max_r, max_n, seed, n_max=200, tolerance=1e-6):
    outcome = {
        ",".join(str(x) for x in point): decay_probe(r, point, n_max, tolerance)
        for r, point in DECAY_CASES
    }
    return Report("decay", {"n_max": n_max, "tolerance": str(tolerance), "points": outcome},
                  all(outcome.values()))


CHECKS = {
    "cross_path_construction": check_cross_path,
    "genfun_expansion_r3": check_genfun_expansion,
    "cassini": check_cassini,
    "cassini_fibonacci_specialization": check_cassini_fibonacci,
    "partition_characterization": check_partitions,
    "multinomial_coefficients": check_multinomial_coefficients,
    "power_scaling_homogeneity": check_homogeneity,
    "genfun_r_fibonacci": check_genfun,
    "genfun_infinite_variate": check_infinite_variate,
    "pell_coefficients": check_pell,
    "fubini_restricted": check_fubini_restricted,
    "fubini_stirling": check_fubini_stirling,
    "preference_orderings": check_preference,
    "bell_complete_ordinary": check_bell_complete,
    "bell_truncation": check_bell_truncation,
    "exp_bell_identity": check_exp_bell,
    "bell_stirling": check_bell_stirling,
    "numeric_binet": check_numeric_binet,
    "decay": check_decay,
}


def run_all(max_r: int = 4, max_n: int = 16, seed: int = 7, names=None, workers: int = 1) -> list[Report]:
    """Run the named checks (all by default); results keep the registry order."""
    names = list(CHECKS) if names is None else list(names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {unknown}")
    if workers <= 1:
        return [CHECKS[n](max_r, max_n, seed) for n in names]
    with ThreadPoolExecutor(workers) as pool:
        # map preserves input order whatever the completion order
        return list(pool.map(lambda n: CHECKS[n](max_r, max_n, seed), names))

"""Exit criteria. Each test records one PASS/FAIL line shown in the pytest summary."""

import random
import subprocess
import sys
import time
from fractions import Fraction

from rfibonacci.exactnum import (
    PartitionProfile,
    fibonacci_num,
    fubini,
    fubini_restricted_bruteforce,
    multinomial,
    pell,
    preference_ordering_profile_counts,
    stirling2,
)
from rfibonacci.fibpoly import clear_cache, fib_matrix, fib_multinomial, fib_recursive, omega, partitions_bounded
from rfibonacci.identities import (
    bell_complete_ordinary,
    bell_partial_exponential,
    cassini_check,
    cassini_matrix,
    exp_bell_fib_identity_check,
    poly_determinant,
)
from rfibonacci.mpoly import MPoly, variable
from rfibonacci.numericbinet import binet_sweep
from rfibonacci.series import (
    decay_probe,
    fib_genfun_coefficients,
    fubini_restricted,
    infinite_variate_coefficients,
    preference_polynomial,
)
from math import factorial


def test_c01_cross_path_construction(criterion):
    clear_cache()
    start = time.perf_counter()
    bad = [
        (r, n)
        for r in range(1, 6)
        for n in range(0, 26)
        if not (fib_recursive(r, n) == fib_multinomial(r, n) and (n < r - 1 or fib_matrix(r, n) == fib_recursive(r, n)))
    ]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    criterion(1, "recursive = matrix = multinomial, r<=5, n<=25", ok, f"{elapsed:.1f}s, mismatches={bad}")
    assert ok


def test_c02_paper_expansion(criterion):
    x1, x2, x3 = (variable(3, i) for i in (1, 2, 3))
    expected = [MPoly.constant(3, 1), x1, x1 ** 2 + x2, x1 ** 3 + 2 * x1 * x2 + x3]
    ok = fib_genfun_coefficients(3, 3) == expected
    criterion(2, "r=3 generating function coefficients 0..3", ok)
    assert ok


def test_c03_cassini(criterion):
    start = time.perf_counter()
    bad = [(r, n) for r in (2, 3, 4, 5) for n in range(2 * r - 2, 2 * r + 9) if not cassini_check(r, n)[0]]
    elapsed = time.perf_counter() - start
    special = all(
        poly_determinant(cassini_matrix(2, n)).specialize({2: 1}) == (-1) ** n
        and fibonacci_num(n - 2) * fibonacci_num(n) - fibonacci_num(n - 1) ** 2 == (-1) ** (n - 1)
        for n in range(3, 25)
    )
    ok = not bad and special and elapsed < 30
    criterion(3, "Cassini residual zero, r in 2..5, n in [2r-2, 2r+8]; x2=1 gives (-1)^n", ok,
              f"{elapsed:.1f}s, failures={bad}")
    assert ok


def test_c04_partition_characterization(criterion):
    bad = []
    for r in range(1, 6):
        for n in range(r, 19):
            f = fib_recursive(r, n)
            if omega(f) != partitions_bounded(n - r + 1, r):
                bad.append((r, n, "omega"))
            if any(c != multinomial(e) for e, c in f.terms):
                bad.append((r, n, "coefficient"))
    ok = not bad
    criterion(4, "Omega(F_n) = P_{n-r+1}(r), coefficients are multinomials", ok, f"failures={bad}")
    assert ok


def test_c05_homogeneity(criterion):
    bad = [
        (r, n)
        for r in range(1, 6)
        for n in range(r - 1, r + 13)
        if fib_recursive(r, n).substitute_power_scaling().is_homogeneous() != n - r + 1
    ]
    ok = not bad
    criterion(5, "F_n(x1, x2^2, ..., xr^r) homogeneous of degree n-r+1", ok, f"failures={bad}")
    assert ok


def test_c06_generating_functions(criterion):
    bad = [
        (r, n)
        for r in range(1, 5)
        for n, c in enumerate(fib_genfun_coefficients(r, 15))
        if c != fib_recursive(r, n + r - 1)
    ]
    rng = random.Random(2024)
    for t in range(20):
        c = [Fraction(rng.randint(-12, 12), rng.randint(1, 12)) for _ in range(10)]
        coeffs = infinite_variate_coefficients(c, 10)
        bad += [("g/(1-g)", t, n) for n in range(1, 11) if coeffs[n] != fib_recursive(n, 2 * n - 1).evaluate(c[:n])]
    ok = not bad
    criterion(6, "1/(1 - sum x_i z^i) at order 15; g/(1-g) at order 10 over 20 draws", ok, f"failures={bad}")
    assert ok


def test_c07_pell(criterion):
    fibs = [fibonacci_num(k) for k in range(1, 13)]
    coeffs = infinite_variate_coefficients(fibs, 12)
    ok = coeffs[1:] == [pell(n) for n in range(1, 13)]
    criterion(7, "coefficients of g/(1-g) with Fibonacci inputs equal Pell numbers, n<=12", ok,
              "equality holds coefficient-wise" if ok else f"got {coeffs[1:]}")
    assert ok


def test_c08_fubini(criterion):
    start = time.perf_counter()
    bad = [(n, r) for n in range(0, 9) for r in range(1, 5) if fubini_restricted(n, r) != fubini_restricted_bruteforce(n, r)]
    anchors = fubini_restricted(3, 2) == 12 and fubini_restricted(8, 8) == 545835 == fubini_restricted_bruteforce(8, 8)
    stirling = all(sum(factorial(k) * stirling2(n, k) for k in range(1, n + 1)) == fubini(n) for n in range(1, 13))
    for r in range(1, 5):
        for n in range(1, 8):
            counts = preference_ordering_profile_counts(n, r)
            got = {PartitionProfile(e): c for e, c in preference_polynomial(n, r).terms}
            if got != {p: Fraction(v) for p, v in counts.items()}:
                bad.append(("preference", n, r))
    elapsed = time.perf_counter() - start
    ok = not bad and anchors and stirling and elapsed < 60
    criterion(8, "restricted Fubini vs enumeration, sum k! S(n,k) = a_n, preference counts", ok,
              f"{elapsed:.1f}s, failures={bad}")
    assert ok


def test_c09_bell(criterion):
    bad = [("complete", n) for n in range(1, 11) if bell_complete_ordinary(n) != fib_recursive(n, 2 * n - 1)]
    for n in range(1, 11):
        b = bell_complete_ordinary(n)
        for r in range(1, 5):
            m = max(n, r)
            if b.truncate_variables(r).embed(m) != fib_recursive(r, n + r - 1).embed(m):
                bad.append(("truncation", n, r))
    bad += [("exponential", n, r) for n in range(1, 9) for r in range(1, 5) if not exp_bell_fib_identity_check(n, r)]
    bad += [
        ("stirling", n, k)
        for n in range(1, 9)
        for k in range(1, n + 1)
        if bell_partial_exponential(n, k).evaluate([1] * n) != stirling2(n, k)
    ]
    ok = not bad
    criterion(9, "complete ordinary Bell = F^{[n]}_{2n-1}, truncation, exponential identity, B_{n,k}(1..1)=S(n,k)",
              ok, f"failures={bad}")
    assert ok


def test_c10_numeric_binet(criterion):
    start = time.perf_counter()
    stats = binet_sweep(seed=7, points=100, max_r=5, max_n=30)
    elapsed = time.perf_counter() - start
    ok = (
        stats.worst() <= 1e-8
        and stats.identity_error < 1e-8
        and stats.degenerate_fraction < 0.05
        and elapsed < 5
    )
    criterion(10, "Binet forms within 1e-8 relative over 100 seeded points; S*sigma within 1e-8 of I", ok,
              f"{elapsed:.2f}s, worst={stats.worst():.2e}, S*sigma={stats.identity_error:.2e}, "
              f"degenerate={stats.degenerate}/{stats.points}")
    assert ok


def test_c11_decay(criterion):
    three = decay_probe(3, [0.3, 0.3, 0.3], 200, 1e-6)
    two = decay_probe(2, [0.1, 0.1], 200, 1e-6)
    ok = three and two
    criterion(11, "decay_probe true at (0.3,0.3,0.3) r=3 and (0.1,0.1) r=2, n_max=200, tol 1e-6", ok,
              f"r=3: {three}, r=2: {two}")
    assert ok


def test_c12_cli_determinism(criterion):
    cmd = [sys.executable, "-m", "rfibonacci", "verify", "all", "--max-r", "4", "--max-n", "16", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    identical = first.stdout == second.stdout and first.returncode == second.returncode
    ok = identical and first.returncode == 0
    failing = [line for line in first.stdout.decode().splitlines() if '"holds": false' in line]
    criterion(12, "`verify all --max-r 4 --max-n 16 --seed 7` exits 0, byte-identical reruns", ok,
              f"exit={first.returncode}, identical={identical}, failing report lines={len(failing)}")
    assert ok

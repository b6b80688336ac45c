import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from rfibonacci import numericbinet as nb
from rfibonacci.fibpoly import fib_recursive
from rfibonacci.numericbinet import (
    ComplexVec,
    DegenerateSpectrum,
    NonConvergence,
    binet_eval,
    binet_sweep,
    char_roots,
    generic_binet_eval,
    homogeneous_sum_eval,
    recursion_eval,
    vandermonde,
    vandermonde_inverse_sigma,
)


def bisect(f, lo, hi, steps=200):
    for _ in range(steps):
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def test_golden_ratio_roots():
    roots = sorted(char_roots(2, [1, 1]).values, key=lambda z: z.real)
    phi = (1 + math.sqrt(5)) / 2
    assert roots[1] == pytest.approx(phi, abs=1e-12)
    assert roots[0] == pytest.approx(1 - phi, abs=1e-12)
    assert phi == pytest.approx(1.6180339887, abs=1e-10)


def test_r1_root():
    assert char_roots(1, [2.5]).values.tolist() == [2.5]


def test_tribonacci_constant():
    oracle = bisect(lambda z: z ** 3 - z ** 2 - z - 1, 1.0, 2.0)
    assert oracle == pytest.approx(1.839286755, abs=1e-9)
    roots = char_roots(3, [1, 1, 1]).values
    real = [z for z in roots if abs(z.imag) < 1e-12]
    pair = [z for z in roots if abs(z.imag) >= 1e-12]
    assert len(real) == 1 and real[0].real == pytest.approx(oracle, abs=1e-12)
    assert len(pair) == 2 and pair[0] == pytest.approx(pair[1].conjugate(), abs=1e-12)


@pytest.mark.parametrize("point", [[0.3, -1.2, 0.7, 2.0], [1, 0, 0, 0, 1], [0.5, 0.5, 0.5, 0.5, 0.5], [-1.0, 0.25]])
def test_root_residuals(point):
    r = len(point)
    roots = char_roots(r, point).values
    coeffs = nb.char_poly_coeffs(point)
    assert np.all(np.abs(np.polyval(coeffs, roots)) <= 1e-10 * (1 + np.abs(roots)) ** r)


def test_degenerate_spectrum_rejected():
    with pytest.raises(DegenerateSpectrum):
        char_roots(2, [2.0, -1.0])  # (z - 1)^2
    with pytest.raises(DegenerateSpectrum):
        ComplexVec([1.0, 1.0 + 1e-9])


def test_deflation_fallback(monkeypatch):
    monkeypatch.setattr(nb, "MAX_SWEEPS", 1)
    roots = char_roots(3, [1, 1, 1]).values
    assert max(z.real for z in roots) == pytest.approx(1.839286755, abs=1e-9)


def test_non_convergence(monkeypatch):
    monkeypatch.setattr(nb, "MAX_SWEEPS", 1)
    monkeypatch.setattr(nb, "_deflation_roots", lambda c: np.zeros(len(c) - 1, dtype=complex) + 7)
    with pytest.raises(NonConvergence):
        char_roots(3, [1, 1, 1])


def test_sigma_two_by_two():
    l1, l2 = 1.5 + 0.2j, -0.7 + 0.1j
    # adjugate inverse of [[l1, l2], [1, 1]]
    det = l1 - l2
    adj = np.array([[1, -l2], [-1, l1]]) / det
    sigma = vandermonde_inverse_sigma(ComplexVec([l1, l2]))
    expected = np.array([[1 / (l1 - l2), -l2 / (l1 - l2)], [1 / (l2 - l1), -l1 / (l2 - l1)]])
    assert np.allclose(sigma, adj, atol=1e-14)
    assert np.allclose(sigma, expected, atol=1e-14)


def test_sigma_r1():
    assert vandermonde_inverse_sigma(ComplexVec([3.0])).tolist() == [[1]]


@pytest.mark.parametrize("point", [[1, 1, 1], [0.4, 1.3, 0.2, 1.9], [2, 0.5, 1, 0.3, 1.1]])
def test_sigma_inverts_vandermonde(point):
    roots = char_roots(len(point), point)
    prod = vandermonde(roots) @ vandermonde_inverse_sigma(roots)
    assert np.abs(prod - np.eye(len(point))).max() < 1e-8
    assert np.allclose(vandermonde_inverse_sigma(roots), np.linalg.inv(vandermonde(roots)), atol=1e-8)


def test_binet_examples():
    exact = fib_recursive(2, 5).evaluate([1, 1])
    assert abs(binet_eval(2, 5, [1, 1]) - float(exact)) < 1e-9
    assert binet_eval(3, 6, [1, 1, 1]) == pytest.approx(7.0, abs=1e-9)
    for r in range(1, 6):
        point = [0.3 + 0.4 * i for i in range(r)]
        assert binet_eval(r, r - 1, point) == pytest.approx(1.0, abs=1e-9)
        for n in range(r - 1):
            assert binet_eval(r, n, point) == pytest.approx(0.0, abs=1e-9)


def test_binet_checks_imaginary_part(monkeypatch):
    monkeypatch.setattr(nb, "IMAG_TOL", -1.0)
    with pytest.raises(nb.ImaginaryResidue):
        binet_eval(3, 6, [1, 1, 1])


def test_homogeneous_sum_examples():
    roots = char_roots(2, [1, 1])
    assert homogeneous_sum_eval(2, 1, roots) == 1
    assert homogeneous_sum_eval(2, 5, roots, point=[1, 1]) == pytest.approx(binet_eval(2, 5, [1, 1]), abs=1e-12)
    assert homogeneous_sum_eval(2, 5, roots, point=[1, 1]) == pytest.approx(5.0, abs=1e-9)
    a, b = 0.7 + 0.2j, -1.1 + 0.5j
    assert homogeneous_sum_eval(2, 3, [a, b]) == pytest.approx(a * a + a * b + b * b, abs=1e-14)


def test_homogeneous_methods_agree():
    roots = char_roots(4, [0.5, 1.2, 0.3, 1.9])
    for n in range(3, 10):
        assert homogeneous_sum_eval(4, n, roots, "enumerate") == pytest.approx(
            homogeneous_sum_eval(4, n, roots), rel=1e-12
        )
    with pytest.raises(ValueError):
        homogeneous_sum_eval(4, 11, roots, "enumerate")


def test_generic_binet_examples():
    point = [0.6, 1.4, 0.9]
    for n in range(12):
        assert generic_binet_eval(3, n, point, [0, 0, 1]) == pytest.approx(binet_eval(3, n, point), rel=1e-10, abs=1e-12)
        assert generic_binet_eval(3, n, point, [0, 0, 0]) == 0
    lucas = [2, 1]
    while len(lucas) <= 6:
        lucas.append(lucas[-1] + lucas[-2])
    assert lucas[6] == 18
    assert generic_binet_eval(2, 6, [1, 1], [2, 1]) == pytest.approx(18.0, abs=1e-9)


def test_generic_binet_seeds_reproduce_initial_values():
    seeds = [0.3, -1.0, 2.0, 0.5]
    point = [0.4, 1.3, 0.2, 1.9]
    for n, s in enumerate(seeds):
        assert generic_binet_eval(4, n, point, seeds) == pytest.approx(s, abs=1e-10)


def test_recursion_eval_against_exact():
    point = [Fraction(1, 3), Fraction(5, 4), Fraction(2)]
    for n in range(20):
        exact = fib_recursive(3, n).evaluate(point)
        assert recursion_eval(3, n, [float(v) for v in point]) == pytest.approx(float(exact), rel=1e-12)


def test_complex_points_stay_complex():
    point = [1 + 0.5j, 0.3 - 0.2j]
    value = binet_eval(2, 6, point)
    assert isinstance(value, complex)
    exact = fib_recursive(2, 6).evaluate(point)
    assert cmath.isclose(value, exact, rel_tol=1e-10)


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_sweep(seed):
    stats = binet_sweep(seed)
    assert stats.points == 100
    assert stats.degenerate_fraction < 0.05
    assert stats.worst() <= 1e-8
    assert stats.identity_error < 1e-8


def test_sweep_is_deterministic():
    rows_a, rows_b = [], []
    binet_sweep(3, rows=rows_a)
    binet_sweep(3, rows=rows_b)
    assert rows_a == rows_b and len(rows_a) > 100

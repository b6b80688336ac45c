"""Floating-point Binet forms built on the spectrum of the companion matrix.

The characteristic polynomial ``z^r - x1 z^(r-1) - ... - xr`` is solved by
simultaneous (Durand-Kerner) iteration. From the roots we form the inverse
of the descending-power Vandermonde matrix and evaluate ``F_n`` three ways:
the sum of ``lam_i^n / prod(lam_i - lam_m)``, the complete homogeneous
symmetric sum of degree ``n-r+1``, and the seeded form for arbitrary
initial values.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

__all__ = [
    "NonConvergence",
    "DegenerateSpectrum",
    "ImaginaryResidue",
    "ComplexVec",
    "char_poly_coeffs",
    "char_roots",
    "vandermonde",
    "vandermonde_inverse_sigma",
    "binet_eval",
    "homogeneous_sum_eval",
    "generic_binet_eval",
    "recursion_eval",
    "SweepStats",
    "binet_sweep",
]

MAX_SWEEPS = 1000
STEP_TOL = 1e-13
RESIDUAL_TOL = 1e-10
SEPARATION_TOL = 1e-6
IMAG_TOL = 1e-8
ENUMERATION_MAX_DEGREE = 6


class NonConvergence(ArithmeticError):
    pass


class DegenerateSpectrum(ArithmeticError):
    pass


class ImaginaryResidue(ArithmeticError):
    """A real-input evaluation kept an imaginary part above tolerance."""


class ComplexVec:
    """Roots accepted as a spectrum: pairwise distinct beyond the degeneracy threshold."""

    __slots__ = ("values", "separation")

    def __init__(self, values, check: bool = True):
        self.values = np.asarray(values, dtype=complex).reshape(-1)
        self.separation = _min_separation(self.values)
        if check:
            limit = SEPARATION_TOL * (1 + np.max(np.abs(self.values), initial=0.0))
            if self.separation < limit:
                raise DegenerateSpectrum(
                    f"roots {self.values} separated by {self.separation:.3g} < {limit:.3g}"
                )

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f"ComplexVec({self.values!r})"


def _min_separation(v: np.ndarray) -> float:
    if len(v) < 2:
        return float("inf")
    d = np.abs(v[:, None] - v[None, :])
    d[np.diag_indices_from(d)] = np.inf
    return float(d.min())


def char_poly_coeffs(point: Sequence[float]) -> np.ndarray:
    """Monic coefficients ``[1, -x1, ..., -xr]``, highest power first."""
    return np.concatenate([[1.0], -np.asarray(point, dtype=complex)])


def _durand_kerner(coeffs: np.ndarray) -> tuple[np.ndarray, bool]:
    r = len(coeffs) - 1
    # Fujiwara-style bound for the initial circle
    radius = 2 * max(abs(coeffs[k]) ** (1.0 / k) for k in range(1, r + 1)) or 1.0
    z = radius * np.exp(2j * np.pi * (np.arange(r) + 0.25) / r) * (0.4 + 0.9j) / abs(0.4 + 0.9j)
    for _ in range(MAX_SWEEPS):
        vals = np.polyval(coeffs, z)
        diffs = z[:, None] - z[None, :]
        np.fill_diagonal(diffs, 1.0)
        denom = diffs.prod(axis=1)
        if np.any(denom == 0):
            z = z + 1e-8 * (np.arange(r) + 1)
            continue
        step = vals / denom
        z = z - step
        if np.max(np.abs(step)) < STEP_TOL * max(1.0, np.max(np.abs(z))):
            return z, True
    return z, False


def _newton_polish(coeffs: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    d = np.polyder(coeffs)
    for _ in range(steps):
        dv = np.polyval(d, z)
        ok = dv != 0
        z = np.where(ok, z - np.polyval(coeffs, z) / np.where(ok, dv, 1), z)
    return z


def _deflation_roots(coeffs: np.ndarray) -> np.ndarray:
    """Newton on the current polynomial, then synthetic division, one root at a time."""
    work = coeffs.astype(complex)
    roots = []
    while len(work) > 2:
        x = 0.4 + 0.9j
        d = np.polyder(work)
        for _ in range(500):
            dv = np.polyval(d, x)
            if dv == 0:
                x += 1e-3
                continue
            step = np.polyval(work, x) / dv
            x -= step
            if abs(step) < STEP_TOL * max(1.0, abs(x)):
                break
        x = _newton_polish(coeffs, np.array([x]))[0]
        roots.append(x)
        work, _ = np.polydiv(work, np.array([1.0, -x]))
    roots.append(-work[1] / work[0])
    return _newton_polish(coeffs, np.array(roots))


def char_roots(r: int, point: Sequence[float]) -> ComplexVec:
    """All roots of ``z^r - x1 z^(r-1) - ... - xr``."""
    if r < 1 or len(point) != r:
        raise ValueError(f"need r >= 1 and a point of length r, got r={r}, len={len(point)}")
    coeffs = char_poly_coeffs(point)
    if r == 1:
        return ComplexVec([coeffs[1] * -1])
    z, converged = _durand_kerner(coeffs)
    if not converged or not _residual_ok(coeffs, z):
        z = _deflation_roots(coeffs)
        if not _residual_ok(coeffs, z):
            raise NonConvergence(f"root iteration failed for point {list(point)}")
    return ComplexVec(z)


def _residual_ok(coeffs: np.ndarray, z: np.ndarray) -> bool:
    r = len(coeffs) - 1
    res = np.abs(np.polyval(coeffs, z))
    return bool(np.all(res <= RESIDUAL_TOL * (1 + np.abs(z)) ** r))


def vandermonde(roots) -> np.ndarray:
    """Rows of descending powers: entry (i, j) is ``lam_j ** (r-1-i)``."""
    lam = np.asarray(getattr(roots, "values", roots), dtype=complex)
    r = len(lam)
    return lam[None, :] ** np.arange(r - 1, -1, -1)[:, None]


def _elementary_symmetric(vals: np.ndarray) -> np.ndarray:
    """``e_0 .. e_len`` of ``vals``."""
    e = np.zeros(len(vals) + 1, dtype=complex)
    e[0] = 1
    for v in vals:
        e[1:] = e[1:] + v * e[:-1]
    return e


def vandermonde_inverse_sigma(roots) -> np.ndarray:
    """Closed-form inverse of :func:`vandermonde`.

    Column 0 is ``1 / prod_{m != i}(lam_i - lam_m)``; column ``j > 0`` is
    ``(-1)**(r-1-j) * e_j(others) / prod_{m != i}(lam_m - lam_i)``.
    """
    if not isinstance(roots, ComplexVec):
        roots = ComplexVec(roots)
    lam = roots.values
    r = len(lam)
    sigma = np.empty((r, r), dtype=complex)
    for i in range(r):
        others = np.delete(lam, i)
        e = _elementary_symmetric(others)
        prod_i_minus = np.prod(lam[i] - others)
        prod_minus_i = np.prod(others - lam[i])
        sigma[i, 0] = 1 / prod_i_minus
        for j in range(1, r):
            sigma[i, j] = (-1) ** (r - 1 - j) * e[j] / prod_minus_i
    return sigma


def _realify(value: complex, point) -> complex | float:
    if np.isrealobj(np.asarray(point)):
        if abs(value.imag) >= IMAG_TOL * (1 + abs(value)):
            raise ImaginaryResidue(f"imaginary part {value.imag:.3g} of {value} too large")
        return float(value.real)
    return complex(value)


def binet_eval(r: int, n: int, point: Sequence[float], roots: ComplexVec | None = None):
    """``sum_i lam_i**n / prod_{m != i}(lam_i - lam_m)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = (roots or char_roots(r, point)).values
    total = 0j
    for i in range(r):
        total += lam[i] ** n / np.prod(lam[i] - np.delete(lam, i))
    return _realify(total, point)


def homogeneous_sum_eval(r: int, n: int, roots, method: str = "recurrence", point=None):
    """Complete homogeneous symmetric sum of degree ``n-r+1`` in the roots.

    ``method="recurrence"`` adds one root at a time with
    ``h_k(l_1..l_j) = h_k(l_1..l_{j-1}) + l_j h_{k-1}(l_1..l_j)``;
    ``method="enumerate"`` lists the monomials directly and is limited to
    degree 6. Pass ``point`` to get the real-part reduction of
    :func:`binet_eval`.
    """
    if n < r - 1:
        raise ValueError(f"need n >= r-1 = {r - 1}")
    lam = np.asarray(getattr(roots, "values", roots), dtype=complex)
    deg = n - r + 1
    if method == "recurrence":
        h = np.zeros(deg + 1, dtype=complex)
        h[0] = 1
        for v in lam:
            for k in range(1, deg + 1):
                h[k] = h[k] + v * h[k - 1]
        value = h[deg]
    elif method == "enumerate":
        if deg > ENUMERATION_MAX_DEGREE:
            raise ValueError(f"enumeration limited to degree {ENUMERATION_MAX_DEGREE}")
        value = sum(
            (np.prod(lam[list(c)]) for c in combinations_with_replacement(range(len(lam)), deg)),
            start=0j,
        ) if deg else 1 + 0j
    else:
        raise ValueError(f"unknown method {method!r}")
    return complex(value) if point is None else _realify(complex(value), point)


def generic_binet_eval(r: int, n: int, point, initial_values, roots: ComplexVec | None = None):
    """``sum_i lam_i**n * sum_j sigma[i, j] * l_{r-1-j}`` for seeds ``l_0 .. l_{r-1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(initial_values) != r:
        raise ValueError(f"need {r} initial values")
    roots = roots or char_roots(r, point)
    sigma = vandermonde_inverse_sigma(roots)
    seeds = np.asarray(initial_values, dtype=complex)[::-1]  # (l_{r-1}, ..., l_0)
    weights = sigma @ seeds
    value = np.sum(roots.values**n * weights)
    return _realify(complex(value), np.concatenate([np.asarray(point), np.asarray(initial_values)]))


def recursion_eval(r: int, n: int, point, initial_values=None) -> float:
    """Direct float recursion; seeds default to ``(0, ..., 0, 1)``."""
    seeds = [0.0] * (r - 1) + [1.0] if initial_values is None else list(initial_values)
    vals = list(seeds)
    while len(vals) <= n:
        vals.append(sum(point[i] * vals[-1 - i] for i in range(r)))
    return vals[n]


# --- seeded sweep ----------------------------------------------------------


class SweepStats:
    """Worst-case errors of the Binet forms over a random sweep."""

    def __init__(self):
        self.points = 0
        self.accepted = 0
        self.degenerate = 0
        self.binet_error = 0.0
        self.homogeneous_error = 0.0
        self.generic_error = 0.0
        self.identity_error = 0.0

    @property
    def degenerate_fraction(self) -> float:
        return self.degenerate / self.points if self.points else 0.0

    def worst(self) -> float:
        return max(self.binet_error, self.homogeneous_error, self.generic_error)

    def as_dict(self) -> dict:
        return {
            "points": self.points,
            "accepted": self.accepted,
            "degenerate": self.degenerate,
            "binet_error": f"{self.binet_error:.3e}",
            "homogeneous_error": f"{self.homogeneous_error:.3e}",
            "generic_error": f"{self.generic_error:.3e}",
            "identity_error": f"{self.identity_error:.3e}",
        }


def _rel(value: float, reference: float) -> float:
    return abs(value - reference) / (1 + abs(reference))


def binet_sweep(seed: int = 0, points: int = 100, max_r: int = 5, max_n: int = 30,
                low: float = 0.2, high: float = 2.0, rows: list | None = None) -> SweepStats:
    """Compare all Binet forms against exact evaluation at random points.

    Each draw picks ``r`` in ``1..max_r``, ``n`` in ``0..max_n`` and a point
    with coordinates uniform in ``[low, high]``. Degenerate spectra are
    counted and skipped. When ``rows`` is a list, one CSV-ready row per
    method is appended to it.
    """
    from fractions import Fraction

    from .fibpoly import fib_recursive

    rng = np.random.default_rng(seed)
    stats = SweepStats()
    for _ in range(points):
        r = int(rng.integers(1, max_r + 1))
        n = int(rng.integers(0, max_n + 1))
        point = [float(v) for v in rng.uniform(low, high, size=r)]
        seeds = [float(v) for v in rng.uniform(-1.0, 1.0, size=r)]
        stats.points += 1
        try:
            roots = char_roots(r, point)
        except DegenerateSpectrum:
            stats.degenerate += 1
            continue
        stats.accepted += 1
        exact = float(fib_recursive(r, n).evaluate([Fraction(v) for v in point]))
        b = binet_eval(r, n, point, roots)
        stats.binet_error = max(stats.binet_error, _rel(b, exact))
        found = [("binet", b)]
        if n >= r - 1:
            h = homogeneous_sum_eval(r, n, roots, point=point)
            stats.homogeneous_error = max(stats.homogeneous_error, _rel(h, exact), _rel(h, b))
            found.append(("homogeneous", h))
        seeded_ref = recursion_eval(r, n, point, seeds)
        g = generic_binet_eval(r, n, point, seeds, roots)
        stats.generic_error = max(stats.generic_error, _rel(g, seeded_ref))
        dev = np.abs(vandermonde(roots) @ vandermonde_inverse_sigma(roots) - np.eye(r)).max()
        stats.identity_error = max(stats.identity_error, float(dev))
        if rows is not None:
            label = ";".join(f"{v:.6g}" for v in point)
            for method, value in found:
                rows.append((r, n, label, method, value, exact, _rel(value, exact)))
            rows.append((r, n, label, "generic", g, seeded_ref, _rel(g, seeded_ref)))
    return stats

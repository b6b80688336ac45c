"""Truncated power series in one indeterminate ``z``.

Coefficients are either all :class:`~fractions.Fraction` or all
:class:`~rfibonacci.mpoly.MPoly` of one arity. Every identity here is checked
coefficient by coefficient; convergence only matters in :func:`decay_probe`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .fibpoly import fib_recursive
from .mpoly import MPoly, variable

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_reciprocal",
    "fib_genfun_coefficients",
    "infinite_variate_coefficients",
    "preference_polynomial",
    "fubini_restricted",
    "decay_probe",
]


class TruncatedSeries:
    """``c_0 + c_1 z + ... + c_N z^N`` modulo ``z^(N+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        polys = [c for c in coeffs if isinstance(c, MPoly)]
        if polys:
            arity = polys[0].arity
            if any(p.arity != arity for p in polys):
                raise ValueError("MPoly coefficients must share one arity")
            coeffs = [c if isinstance(c, MPoly) else MPoly.constant(arity, c) for c in coeffs]
        else:
            coeffs = [Fraction(c) for c in coeffs]
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __mul__(self, other):
        return series_mul(self, other)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1])

    def to_json(self) -> list:
        return [c.to_json() if isinstance(c, MPoly) else str(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    out = []
    for m in range(n + 1):
        acc = a[0] * b[m]
        for k in range(1, m + 1):
            acc = acc + a[k] * b[m - k]
        out.append(acc)
    return TruncatedSeries(out)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1/a`` for a series with constant term exactly 1."""
    if a[0] != 1:
        raise ValueError("series_reciprocal needs constant term 1")
    b = [a[0]]
    for n in range(1, a.order + 1):
        acc = a[1] * b[n - 1]
        for k in range(2, n + 1):
            acc = acc + a[k] * b[n - k]
        b.append(-acc)
    return TruncatedSeries(b)


def fib_genfun_coefficients(r: int, order: int) -> list[MPoly]:
    """Coefficients ``0..order`` of ``1 / (1 - x1 z - ... - xr z^r)``."""
    if r < 1 or order < 0:
        raise ValueError("need r >= 1 and order >= 0")
    denom = [MPoly.constant(r, 1)] + [
        -variable(r, i) if i <= r else MPoly.constant(r, 0) for i in range(1, order + 1)
    ]
    return list(series_reciprocal(TruncatedSeries(denom)).coeffs)


def infinite_variate_coefficients(c: Sequence, order: int) -> list[Fraction]:
    """Coefficients of ``g / (1 - g)`` with ``g = c[0] z + c[1] z^2 + ...``.

    Index equals the power of ``z``; entry 0 is always 0. Only ``c[:order]``
    is used.
    """
    if len(c) < order:
        raise ValueError(f"need at least {order} coefficients, got {len(c)}")
    g = [Fraction(0)] + [Fraction(v) for v in c[:order]]
    one_minus_g = TruncatedSeries([Fraction(1)] + [-v for v in g[1:]])
    return list(series_mul(TruncatedSeries(g), series_reciprocal(one_minus_g)).coeffs)


def preference_polynomial(n: int, r: int) -> MPoly:
    """``n! * F_{n+r-1}(x1, x2/2!, ..., xr/r!)``.

    Coefficient of ``x**a`` counts ordered set partitions of an n-set with
    ``a_i`` blocks of size ``i``.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    f = fib_recursive(r, n + r - 1)
    return f.scale_variables([Fraction(1, factorial(i)) for i in range(1, r + 1)]).scale(factorial(n))


def fubini_restricted(n: int, r: int) -> int:
    """Ordered set partitions of an n-set with blocks of size <= r, via evaluation."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    value = factorial(n) * fib_recursive(r, n + r - 1).evaluate(
        [Fraction(1, factorial(i)) for i in range(1, r + 1)]
    )
    if value.denominator != 1:
        raise AssertionError(f"fubini_restricted({n}, {r}) is not integral: {value}")
    return int(value)


def decay_probe(r: int, point: Sequence[float], n_max: int, tolerance: float) -> bool:
    """Float recursion for ``F_n`` at ``point``; True if the last quarter stays below tolerance.

    Requires ``sum |x_i| < 1``.
    """
    if len(point) != r:
        raise ValueError(f"point must have {r} coordinates")
    if sum(abs(float(x)) for x in point) >= 1:
        raise ValueError("decay_probe needs sum |x_i| < 1")
    xs = [float(x) for x in point]
    vals = [0.0] * (r - 1) + [1.0]
    while len(vals) <= n_max:
        vals.append(sum(xs[i] * vals[-1 - i] for i in range(r)))
    start = n_max - n_max // 4
    return all(abs(v) < tolerance for v in vals[start : n_max + 1])

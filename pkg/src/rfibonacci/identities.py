"""Exact checks of the Cassini-type determinant and the Bell-polynomial identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any

from .exactnum import PartitionProfile, fubini, stirling2
from .fibpoly import fib_recursive
from .mpoly import MPoly, variable, zero
from .polymatrix import PolyMatrix, poly_determinant

__all__ = [
    "PolyMatrix",
    "poly_determinant",
    "Report",
    "cassini_matrix",
    "cassini_rhs",
    "cassini_check",
    "bell_profiles",
    "bell_partial_ordinary",
    "bell_complete_ordinary",
    "bell_partial_exponential",
    "exp_bell_fib_identity_check",
    "fubini_stirling_check",
]


@dataclass
class Report:
    """Outcome of one identity check; ``residual`` is an MPoly or None."""

    identity: str
    params: dict = field(default_factory=dict)
    holds: bool = True
    residual: MPoly | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "params": self.params,
            "holds": bool(self.holds),
            "residual": None if self.residual is None else self.residual.to_json(),
        }


def _cassini_guard(r: int, n: int):
    if r < 1:
        raise ValueError("r must be positive")
    if n < 2 * r - 2:
        raise ValueError(f"Cassini window needs n >= 2r-2 = {2 * r - 2}, got n={n}")


def cassini_matrix(r: int, n: int) -> PolyMatrix:
    """r x r window whose (i, j) entry is ``F_{n-r+1-i+j}`` (0-based i, j)."""
    _cassini_guard(r, n)
    return PolyMatrix(
        [[fib_recursive(r, n - r + 1 - i + j) for j in range(r)] for i in range(r)], r
    )


def cassini_rhs(r: int, n: int) -> MPoly:
    """``(-1)**(n(r+1)) * x_r**(n-2r+2)``."""
    _cassini_guard(r, n)
    rhs = variable(r, r) ** (n - 2 * r + 2)
    return -rhs if (n * (r + 1)) % 2 else rhs


def cassini_check(r: int, n: int, method: str = "auto") -> tuple[bool, MPoly]:
    """Return ``(holds, det - rhs)`` for the window matrix at (r, n)."""
    det = poly_determinant(cassini_matrix(r, n), method)
    residual = det - cassini_rhs(r, n)
    return residual.is_zero(), residual


def bell_profiles(n: int, k: int):
    """Profiles ``(j_1, ..., j_{n-k+1})`` with ``sum j = k`` and ``sum i*j_i = n``.

    Returned padded to length ``n``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    width = n - k + 1
    counts = [0] * n
    out = []

    def walk(i: int, parts_left: int, weight_left: int):
        if parts_left == 0:
            if weight_left == 0:
                out.append(PartitionProfile(tuple(counts)))
            return
        if i > width or i * parts_left > weight_left:
            return
        # remaining parts are all >= i
        for j in range(min(parts_left, weight_left // i), -1, -1):
            counts[i - 1] = j
            walk(i + 1, parts_left - j, weight_left - i * j)
        counts[i - 1] = 0

    walk(1, k, n)
    return out


def bell_partial_ordinary(n: int, k: int) -> MPoly:
    """Partial ordinary Bell polynomial in ambient arity ``n``."""
    terms = {}
    for p in bell_profiles(n, k):
        c = factorial(k)
        for j in p.multiplicities:
            c //= factorial(j)
        terms[p.multiplicities] = Fraction(c)
    return MPoly(n, terms)


def bell_complete_ordinary(n: int) -> MPoly:
    if n < 1:
        raise ValueError("n must be >= 1")
    total = zero(n)
    for k in range(1, n + 1):
        total = total + bell_partial_ordinary(n, k)
    return total


def bell_partial_exponential(n: int, k: int) -> MPoly:
    """Partial exponential Bell polynomial, coefficient ``n! / prod(j_i! * (i!)**j_i)``.

    Arity ``n``. With all variables set to 1 this gives ``S(n, k)``.
    """
    terms = {}
    for p in bell_profiles(n, k):
        den = 1
        for i, j in enumerate(p.multiplicities, start=1):
            den *= factorial(j) * factorial(i) ** j
        terms[p.multiplicities] = Fraction(factorial(n), den)
    return MPoly(n, terms)


def exp_bell_fib_identity_check(n: int, r: int) -> bool:
    """``sum_k k! B_{n,k}(1!x1, 2!x2, ..., r!xr, 0, ...) == n! F_{n+r-1}`` (in r variables)."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    ambient = max(n, r)
    factors = [factorial(i) if i <= r else 0 for i in range(1, n + 1)]
    lhs = zero(n)
    for k in range(1, n + 1):
        lhs = lhs + bell_partial_exponential(n, k).scale_variables(factors).scale(factorial(k))
    rhs = fib_recursive(r, n + r - 1).scale(factorial(n))
    return lhs.embed(ambient) == rhs.embed(ambient)


def fubini_stirling_check(n: int) -> bool:
    """``sum_k k! S(n,k) == a_n == n! F^{[n]}_{2n-1}(1/1!, ..., 1/n!)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    stirling_side = sum(factorial(k) * stirling2(n, k) for k in range(1, n + 1))
    poly_side = factorial(n) * fib_recursive(n, 2 * n - 1).evaluate(
        [Fraction(1, factorial(i)) for i in range(1, n + 1)]
    )
    return stirling_side == fubini(n) == poly_side

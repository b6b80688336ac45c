"""Multivariate r-Fibonacci polynomials over the rationals.

``F_n(x1, ..., xr)`` satisfies ``F_n = x1 F_{n-1} + ... + xr F_{n-r}`` with
seeds ``0, ..., 0, 1`` ending at index ``r-1``. The package builds these
polynomials in several independent ways and checks, in exact arithmetic,
the determinant, partition, generating-function and Bell-polynomial
identities they satisfy. :mod:`rfibonacci.numericbinet` adds floating-point
evaluation through the roots of the characteristic polynomial.
"""

from .exactnum import (
    PartitionProfile,
    Rational,
    factorial,
    fibonacci_num,
    fubini,
    fubini_restricted_bruteforce,
    multinomial,
    pell,
    preference_ordering_count,
    stirling2,
)
from .fibpoly import (
    FibIndex,
    PartitionSet,
    fib_generic,
    fib_matrix,
    fib_multinomial,
    fib_recursive,
    omega,
    partitions_bounded,
)
from .identities import (
    bell_complete_ordinary,
    bell_partial_exponential,
    bell_partial_ordinary,
    cassini_check,
    cassini_matrix,
    exp_bell_fib_identity_check,
    fubini_stirling_check,
)
from .mpoly import MPoly, one, variable, zero
from .polymatrix import PolyMatrix, poly_determinant
from .series import (
    TruncatedSeries,
    decay_probe,
    fib_genfun_coefficients,
    fubini_restricted,
    infinite_variate_coefficients,
    preference_polynomial,
    series_mul,
    series_reciprocal,
)

__version__ = "0.1.0"

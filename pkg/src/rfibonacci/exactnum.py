"""Exact integers, rationals and classical combinatorial counts.

Rationals are :class:`fractions.Fraction` instances, which are always
reduced with a positive denominator. The enumeration routines at the bottom
of the module walk ordered set partitions explicitly; they are exponential
and meant as independent oracles for small ``n`` (``n <= 10``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "Rational",
    "PartitionProfile",
    "factorial",
    "multinomial",
    "stirling2",
    "fubini",
    "pell",
    "fibonacci_num",
    "format_rational",
    "parse_rational",
    "ordered_set_partitions",
    "fubini_restricted_bruteforce",
    "preference_ordering_count",
    "preference_ordering_profile_counts",
]

Rational = Fraction


def format_rational(q) -> str:
    """Render an integer or rational as ``"p/q"``, dropping ``/1``."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True, order=True)
class PartitionProfile:
    """Multiplicity vector ``(a_1, ..., a_r)`` of the partition ``(1^a_1, ..., r^a_r)``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(a) for a in self.multiplicities))
        if any(a < 0 for a in self.multiplicities):
            raise ValueError(f"negative multiplicity in {self.multiplicities}")

    @property
    def arity(self) -> int:
        return len(self.multiplicities)

    @property
    def weight(self) -> int:
        return sum(i * a for i, a in enumerate(self.multiplicities, start=1))

    @property
    def length(self) -> int:
        """Number of parts."""
        return sum(self.multiplicities)

    def parts(self) -> list[int]:
        """Parts in weakly decreasing order."""
        out = []
        for i in range(self.arity, 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return out

    def padded(self, arity: int) -> "PartitionProfile":
        if arity < self.arity and any(self.multiplicities[arity:]):
            raise ValueError(f"profile {self.multiplicities} has parts larger than {arity}")
        m = self.multiplicities[:arity]
        return PartitionProfile(m + (0,) * (arity - len(m)))

    @classmethod
    def from_parts(cls, parts: Sequence[int], arity: int) -> "PartitionProfile":
        m = [0] * arity
        for p in parts:
            if not 1 <= p <= arity:
                raise ValueError(f"part {p} outside 1..{arity}")
            m[p - 1] += 1
        return cls(tuple(m))

    def __str__(self):
        bits = []
        for i, a in enumerate(self.multiplicities, start=1):
            if a == 1:
                bits.append(str(i))
            elif a > 1:
                bits.append(f"{i}^{a}")
        return "(" + ",".join(bits) + ")"


def multinomial(parts: Sequence[int]) -> int:
    """``(sum parts)! / prod(parts_i!)`` built from binomials, so no big quotient."""
    total = 0
    out = 1
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += p
        out *= comb(total, p)
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the triangular recurrence."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def fubini(n: int) -> int:
    """Ordered Bell number: a_0 = 1, a_n = sum_k C(n, k) a_{n-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def _two_term(n: int, p: int, q: int, s0: int, s1: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = s0, s1
    for _ in range(n):
        a, b = b, p * b + q * a
    return a


def pell(n: int) -> int:
    return _two_term(n, 2, 1, 0, 1)


def fibonacci_num(n: int) -> int:
    return _two_term(n, 1, 1, 0, 1)


# --- brute-force oracles -------------------------------------------------


def ordered_set_partitions(elements: Sequence, max_block: int | None = None) -> Iterator[tuple[tuple, ...]]:
    """Yield every ordered set partition of ``elements`` as a tuple of blocks.

    The first block is chosen as any nonempty subset (of size at most
    ``max_block``) of the remaining elements, then the rest is partitioned
    recursively. Exponential: keep ``len(elements)`` small.
    """
    items = tuple(elements)
    cap = len(items) if max_block is None else max_block
    if not items:
        yield ()
        return
    n = len(items)
    # subsets as bitmasks, in increasing order for determinism
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if size > cap:
            continue
        block = tuple(items[i] for i in range(n) if mask >> i & 1)
        rest = tuple(items[i] for i in range(n) if not mask >> i & 1)
        for tail in ordered_set_partitions(rest, cap):
            yield (block,) + tail


def fubini_restricted_bruteforce(n: int, r: int) -> int:
    """Count ordered set partitions of an n-set with every block of size <= r."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    return sum(1 for _ in ordered_set_partitions(range(n), r))


def preference_ordering_profile_counts(n: int, r: int) -> Counter:
    """Tally ordered set partitions of an n-set (blocks <= r) by block-size profile."""
    tally: Counter = Counter()
    for op in ordered_set_partitions(range(n), r):
        tally[PartitionProfile.from_parts([len(b) for b in op], r)] += 1
    return tally


def preference_ordering_count(n: int, profile: PartitionProfile | Sequence[int]) -> int:
    """Number of ordered set partitions of an n-set with exactly ``a_i`` blocks of size i."""
    if not isinstance(profile, PartitionProfile):
        profile = PartitionProfile(tuple(profile))
    if profile.weight != n:
        raise ValueError(f"profile {profile} has weight {profile.weight}, expected {n}")
    r = max((i for i, a in enumerate(profile.multiplicities, 1) if a), default=1)
    target = profile.padded(r)
    return preference_ordering_profile_counts(n, r)[target]

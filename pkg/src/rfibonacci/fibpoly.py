"""r-Fibonacci polynomials and their partition structure.

``F_n`` in ``r`` variables is 0 for ``n < r-1``, 1 at ``n = r-1`` and
``x1*F_{n-1} + ... + xr*F_{n-r}`` afterwards. Three constructions are kept
deliberately separate so they can check each other:

* :func:`fib_recursive` runs the recursion bottom-up (memoized),
* :func:`fib_matrix` raises the companion matrix to a power,
* :func:`fib_multinomial` sums multinomial-weighted monomials over
  partitions with parts at most ``r``.

:func:`fib_generic` runs the recursion from arbitrary polynomial seeds.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactnum import PartitionProfile, multinomial
from .mpoly import ArityMismatch, MPoly, one, variable, zero
from .polymatrix import companion_matrix

__all__ = [
    "FibIndex",
    "PartitionSet",
    "fib_recursive",
    "fib_generic",
    "fib_matrix",
    "fib_multinomial",
    "omega",
    "partitions_bounded",
    "nested_profiles",
    "clear_cache",
]


@dataclass(frozen=True)
class FibIndex:
    r: int
    n: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")

    @property
    def weight(self) -> int:
        """Partition weight ``n - r + 1`` of the monomials in ``F_n``."""
        return self.n - self.r + 1


@dataclass(frozen=True)
class PartitionSet:
    weight: int
    maxpart: int
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for p in self.members:
            if p.weight != self.weight or any(p.multiplicities[self.maxpart:]):
                raise ValueError(f"{p} does not belong to P_{self.weight}({self.maxpart})")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, p):
        return p in self.members

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "maxpart": self.maxpart,
            "profiles": sorted(list(p.padded(self.maxpart).multiplicities) for p in self.members),
        }


def _index(r, n=None) -> FibIndex:
    if isinstance(r, FibIndex):
        return r
    return FibIndex(r, n)


_cache: dict[int, list[MPoly]] = {}
_cache_lock = threading.Lock()


def clear_cache():
    with _cache_lock:
        _cache.clear()


def _run_recursion(r: int, seeds: Sequence[MPoly], upto: int, table: list[MPoly]) -> None:
    xs = [variable(r, i) for i in range(1, r + 1)]
    if not table:
        table.extend(seeds)
    while len(table) <= upto:
        m = len(table)
        acc = zero(r)
        for i in range(1, r + 1):
            prev = table[m - i]
            if prev:
                acc = acc + xs[i - 1] * prev
        table.append(acc)


def fib_recursive(r, n: int | None = None) -> MPoly:
    """``F_n`` in ``r`` variables from the defining recursion.

    Accepts either ``(r, n)`` or a :class:`FibIndex`.
    """
    idx = _index(r, n)
    r, n = idx.r, idx.n
    with _cache_lock:
        table = _cache.setdefault(r, [])
        if len(table) <= n:
            seeds = [zero(r)] * (r - 1) + [one(r)]
            _run_recursion(r, seeds, n, table)
        return table[n]


def fib_generic(r: int, n: int, initials: Sequence[MPoly]) -> MPoly:
    """Generic r-Fibonacci polynomial with seeds ``initials[k]`` at index ``k < r``."""
    FibIndex(r, n)
    if len(initials) != r:
        raise ValueError(f"need {r} initial polynomials, got {len(initials)}")
    seeds = []
    for s in initials:
        if isinstance(s, MPoly):
            if s.arity != r:
                raise ArityMismatch(f"initial polynomial has arity {s.arity}, expected {r}")
        else:
            s = MPoly.constant(r, s)
        seeds.append(s)
    if n < r:
        return seeds[n]
    table: list[MPoly] = []
    _run_recursion(r, seeds, n, table)
    return table[n]


def fib_matrix(r, n: int | None = None) -> MPoly:
    """``F_n`` as the top entry of ``M**(n-r+1) @ (1, 0, ..., 0)`` for the companion matrix M."""
    idx = _index(r, n)
    r, n = idx.r, idx.n
    if n < r - 1:
        raise ValueError(f"fib_matrix needs n >= r-1 = {r - 1}, got {n}")
    power = companion_matrix(r) ** (n - r + 1)
    seed = [one(r)] + [zero(r)] * (r - 1)
    return power.apply(seed)[0]


def nested_profiles(weight: int, r: int) -> Iterator[PartitionProfile]:
    """Profiles of ``weight`` with parts <= r, looping a_r outermost down to a_2.

    ``a_1`` is whatever weight is left after the inner loops.
    """
    if weight < 0:
        return
    counts = [0] * r

    def loop(i: int, left: int):
        if i == 1:
            counts[0] = left
            yield PartitionProfile(tuple(counts))
            return
        for a in range(left // i + 1):
            counts[i - 1] = a
            yield from loop(i - 1, left - i * a)
        counts[i - 1] = 0

    yield from loop(r, weight)


def fib_multinomial(r, n: int | None = None) -> MPoly:
    """``F_n`` as the sum of ``multinomial(a) * x**a`` over profiles of weight n-r+1."""
    idx = _index(r, n)
    return MPoly._raw(
        idx.r,
        {p.multiplicities: Fraction(multinomial(p.multiplicities)) for p in nested_profiles(idx.weight, idx.r)},
    )


def _bounded_part_lists(weight: int, bound: int) -> Iterator[list[int]]:
    if weight == 0:
        yield []
        return
    for first in range(min(weight, bound), 0, -1):
        for rest in _bounded_part_lists(weight - first, first):
            yield [first] + rest


def partitions_bounded(weight: int, maxpart: int) -> PartitionSet:
    """All partitions of ``weight`` into parts no larger than ``maxpart``."""
    if maxpart < 1:
        raise ValueError("maxpart must be positive")
    if weight < 0:
        return PartitionSet(weight, maxpart, frozenset())
    members = frozenset(
        PartitionProfile.from_parts(parts, maxpart) for parts in _bounded_part_lists(weight, maxpart)
    )
    return PartitionSet(weight, maxpart, members)


def omega(p: MPoly) -> PartitionSet:
    """Partitions read off the exponent vectors of ``p``.

    ``p`` must have nonnegative integer coefficients. The result's weight is
    the common weight of the support (0 for the zero polynomial); mixed
    weights raise ``ValueError``.
    """
    if not p.has_nonnegative_integer_coefficients():
        raise ValueError("omega needs nonnegative integer coefficients")
    members = frozenset(PartitionProfile(e) for e in p.support())
    weights = {m.weight for m in members}
    if len(weights) > 1:
        raise ValueError(f"support mixes partition weights {sorted(weights)}")
    return PartitionSet(weights.pop() if weights else 0, p.arity, members)


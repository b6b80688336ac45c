"""Sparse multivariate polynomials over the rationals.

An :class:`MPoly` has a fixed number of variables ``x1 .. x_arity`` and maps
exponent tuples to nonzero :class:`~fractions.Fraction` coefficients. Terms
are reported in graded lexicographic order, highest first. Binary operations
refuse to mix arities; use :meth:`MPoly.embed` to move between them.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

__all__ = ["MPoly", "ArityMismatch", "zero", "one", "variable", "grlex_key"]

Exponent = tuple[int, ...]


class ArityMismatch(ValueError):
    pass


def grlex_key(exp: Exponent):
    """Sort key for graded lexicographic order (ascending)."""
    return (sum(exp), exp)


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class MPoly:
    __slots__ = ("_arity", "_terms", "_sorted", "_hash")

    def __init__(self, arity: int, terms: Mapping[Exponent, object] | Iterable = ()):
        if arity < 1:
            raise ValueError("arity must be positive")
        self._arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity:
                raise ArityMismatch(f"exponent {exp} does not have length {arity}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _coerce_scalar(c)
            if exp in d:
                c += d[exp]
            if c:
                d[exp] = c
            else:
                d.pop(exp, None)
        self._terms = d
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, d: dict) -> "MPoly":
        # trusted constructor: d already has no zero coefficients
        p = cls.__new__(cls)
        p._arity = arity
        p._terms = d
        p._sorted = None
        p._hash = None
        return p

    @classmethod
    def constant(cls, arity: int, c) -> "MPoly":
        c = _coerce_scalar(c)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "MPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    # --- inspection ---------------------------------------------------

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> tuple[tuple[Exponent, Fraction], ...]:
        """(exponent, coefficient) pairs in descending graded lex order."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
            )
        return self._sorted

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def support(self) -> list[Exponent]:
        return [e for e, _ in self.terms]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self._arity in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._arity, Fraction(0))

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> int | None:
        """Common total degree of all terms, or None. Zero counts as degree 0."""
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._terms.values())

    # --- equality / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._arity == other._arity and self._terms == other._terms
        if isinstance(other, (int, _RationalABC)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    # --- arithmetic ----------------------------------------------------

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other._arity != self._arity:
                raise ArityMismatch(f"arity {self._arity} vs {other._arity}")
            return other
        return MPoly.constant(self._arity, other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                del d[e]
        return MPoly._raw(self._arity, d)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self._arity, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = _coerce_scalar(c)
        if not c:
            return MPoly._raw(self._arity, {})
        return MPoly._raw(self._arity, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._lift(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d: dict[Exponent, Fraction] = {}
        get = d.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                d[e] = get(e, 0) + ca * cb
        return MPoly._raw(self._arity, {e: c for e, c in d.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.constant(self._arity, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Quotient of a division known to be exact.

        Runs the leading-term division loop in graded lex order and raises
        ``ArithmeticError`` as soon as a leading term fails to divide or a
        remainder would be left over.
        """
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(divisor) == 1:
            (de, dc), = divisor._terms.items()
            out = {}
            for e, c in self._terms.items():
                q = tuple(x - y for x, y in zip(e, de))
                if min(q) < 0:
                    raise ArithmeticError("division is not exact")
                out[q] = c / dc
            return MPoly._raw(self._arity, out)

        lead_e, lead_c = divisor.leading_term()
        rest = [(e, c) for e, c in divisor._terms.items() if e != lead_e]
        rem = dict(self._terms)
        heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
        heapq.heapify(heap)
        quot: dict[Exponent, Fraction] = {}
        while heap:
            _, neg = heapq.heappop(heap)
            e = tuple(-x for x in neg)
            c = rem.pop(e, None)
            if c is None:
                continue  # stale heap entry
            q_e = tuple(x - y for x, y in zip(e, lead_e))
            if min(q_e) < 0:
                raise ArithmeticError("division is not exact")
            q_c = c / lead_c
            quot[q_e] = q_c
            for de, dc in rest:
                t = tuple(x + y for x, y in zip(q_e, de))
                v = rem.get(t, 0) - q_c * dc
                if v:
                    if t not in rem:
                        heapq.heappush(heap, (-sum(t), tuple(-x for x in t)))
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MPoly._raw(self._arity, quot)

    # --- substitution ----------------------------------------------------

    def evaluate(self, point: Sequence):
        """Substitute ``point`` for ``(x1, ..., x_arity)``.

        Exact for integer/rational points; float or complex points are also
        accepted and evaluated in that field.
        """
        if len(point) != self._arity:
            raise ArityMismatch(f"point has length {len(point)}, expected {self._arity}")
        exact = all(isinstance(v, (int, _RationalABC)) for v in point)
        pt = [Fraction(v) for v in point] if exact else list(point)
        total = Fraction(0) if exact else 0.0
        powers = [dict() for _ in pt]
        for e, c in self._terms.items():
            term = c if exact else float(c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = pt[i] ** k
                    term = term * cache[k]
            total += term
        return total

    def substitute_power_scaling(self) -> "MPoly":
        """Replace each ``x_i`` by ``x_i**i``."""
        return MPoly._raw(
            self._arity,
            {tuple(i * k for i, k in enumerate(e, start=1)): c for e, c in self._terms.items()},
        )

    def scale_variables(self, factors: Sequence) -> "MPoly":
        """Replace each ``x_i`` by ``factors[i-1] * x_i``."""
        if len(factors) != self._arity:
            raise ArityMismatch("need one factor per variable")
        fs = [Fraction(f) for f in factors]
        d = {}
        for e, c in self._terms.items():
            for f, k in zip(fs, e):
                if k:
                    c = c * f**k
            if c:
                d[e] = c
        return MPoly._raw(self._arity, d)

    def specialize(self, values: Mapping[int, object]) -> "MPoly":
        """Set ``x_i = values[i]`` (1-based, exact values); arity is kept."""
        vals = {i - 1: Fraction(v) for i, v in values.items()}
        if any(not 0 <= i < self._arity for i in vals):
            raise IndexError("variable index out of range")
        out = MPoly(self._arity)
        d: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            e = list(e)
            for i, v in vals.items():
                if e[i]:
                    c = c * v ** e[i]
                    e[i] = 0
            e = tuple(e)
            d[e] = d.get(e, 0) + c
        out._terms = {e: c for e, c in d.items() if c}
        return out

    def embed(self, arity: int) -> "MPoly":
        """View the polynomial in ``arity`` variables.

        Growing pads exponents with zeros. Shrinking is allowed only when the
        dropped variables do not occur.
        """
        if arity == self._arity:
            return self
        if arity > self._arity:
            pad = (0,) * (arity - self._arity)
            return MPoly._raw(arity, {e + pad: c for e, c in self._terms.items()})
        d = {}
        for e, c in self._terms.items():
            if any(e[arity:]):
                raise ArityMismatch(f"variable beyond x{arity} occurs in the polynomial")
            d[e[:arity]] = c
        return MPoly._raw(arity, d)

    def truncate_variables(self, keep: int) -> "MPoly":
        """Set ``x_i = 0`` for every ``i > keep`` (arity unchanged)."""
        return MPoly._raw(self._arity, {e: c for e, c in self._terms.items() if not any(e[keep:])})

    # --- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "arity": self._arity,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.terms],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MPoly":
        return cls(int(obj["arity"]), [(t["exp"], Fraction(t["coeff"])) for t in obj["terms"]])

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.terms):
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e, start=1) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"MPoly({self._arity}, {str(self)!r})"


def zero(arity: int) -> MPoly:
    return MPoly._raw(arity, {}) if arity >= 1 else MPoly(arity)


def one(arity: int) -> MPoly:
    return MPoly.constant(arity, 1) if arity >= 1 else MPoly(arity)


def variable(arity: int, i: int) -> MPoly:
    """The monomial ``x_i`` (1-based) in ``arity`` variables."""
    if not 1 <= i <= arity:
        raise IndexError(f"variable index {i} outside 1..{arity}")
    e = [0] * arity
    e[i - 1] = 1
    return MPoly._raw(arity, {tuple(e): Fraction(1)})

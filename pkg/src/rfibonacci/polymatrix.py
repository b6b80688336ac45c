"""Square matrices with :class:`MPoly` entries and exact determinants."""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .mpoly import ArityMismatch, MPoly, one, zero

__all__ = ["PolyMatrix", "poly_determinant", "companion_matrix"]

# dimension at which poly_determinant switches from cofactor expansion to elimination
BAREISS_MIN_DIM = 5


class PolyMatrix:
    """Immutable square matrix of MPolys sharing one arity."""

    __slots__ = ("rows", "arity")

    def __init__(self, rows: Sequence[Sequence[MPoly]], arity: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square and nonempty")
        if arity is None:
            arity = next((e.arity for r in rows for e in r if isinstance(e, MPoly)), None)
            if arity is None:
                raise ValueError("cannot infer arity from scalar-only rows")
        lifted = []
        for r in rows:
            row = []
            for e in r:
                if isinstance(e, MPoly):
                    if e.arity != arity:
                        raise ArityMismatch(f"entry of arity {e.arity} in matrix of arity {arity}")
                else:
                    e = MPoly.constant(arity, e)
                row.append(e)
            lifted.append(tuple(row))
        self.rows = tuple(lifted)
        self.arity = arity

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @classmethod
    def identity(cls, dim: int, arity: int) -> "PolyMatrix":
        o, z = one(arity), zero(arity)
        return cls([[o if i == j else z for j in range(dim)] for i in range(dim)], arity)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        if other.arity != self.arity:
            raise ArityMismatch("arity mismatch")
        n = self.dimension
        z = zero(self.arity)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = z
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.arity)

    def apply(self, vec: Sequence[MPoly]) -> list[MPoly]:
        z = zero(self.arity)
        out = []
        for row in self.rows:
            acc = z
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def __pow__(self, k: int) -> "PolyMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = PolyMatrix.identity(self.dimension, self.arity)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def determinant(self, method: str = "auto") -> MPoly:
        return poly_determinant(self, method)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "arity": self.arity,
            "entries": [[e.to_json() for e in row] for row in self.rows],
        }

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def companion_matrix(r: int) -> PolyMatrix:
    """First row ``(x1, ..., xr)``, ones on the subdiagonal."""
    from .mpoly import variable

    z, o = zero(r), one(r)
    rows = [[variable(r, j + 1) for j in range(r)]]
    for i in range(1, r):
        rows.append([o if j == i - 1 else z for j in range(r)])
    return PolyMatrix(rows, r)


def _perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            cyc += 1
        if cyc % 2 == 0:
            sign = -sign
    return sign


def _det_leibniz(rows) -> MPoly:
    n = len(rows)
    arity = rows[0][0].arity
    total = zero(arity)
    for p in permutations(range(n)):
        term = None
        for i in range(n):
            e = rows[i][p[i]]
            if not e:
                term = None
                break
            term = e if term is None else term * e
        if term is not None:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total


def _det_cofactor(rows) -> MPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero(rows[0][0].arity)
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows) -> MPoly:
    m = [list(r) for r in rows]
    n = len(m)
    arity = m[0][0].arity
    sign = 1
    prev = one(arity)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return zero(arity)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if k else num
            m[i][k] = zero(arity)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def poly_determinant(m: PolyMatrix, method: str = "auto") -> MPoly:
    """Exact determinant of a polynomial matrix.

    ``method`` is one of ``"auto"`` (cofactor expansion below dimension 5,
    fraction-free elimination from 5 up), ``"cofactor"``, ``"bareiss"`` or
    ``"leibniz"``.
    """
    rows = m.rows
    if method == "auto":
        method = "bareiss" if m.dimension >= BAREISS_MIN_DIM else "cofactor"
    if method == "cofactor":
        return _det_cofactor(rows)
    if method == "bareiss":
        return _det_bareiss(rows)
    if method == "leibniz":
        return _det_leibniz(rows)
    raise ValueError(f"unknown determinant method {method!r}")

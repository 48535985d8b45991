"""Exact rational matrix arithmetic on tuples of :class:`fractions.Fraction`.

Matrices are row-major tuples of tuples. Nothing here touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a lattice entry written as ``0.1`` is almost never
    the rational the author meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational entries")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"not an exact rational: {value!r}")
        frac = Fraction(value.replace(" ", ""))
        return frac
    raise TypeError(f"cannot read {type(value).__name__} {value!r} as an exact rational")


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(tuple(to_fraction(v) for v in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def det(a: Matrix) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    n = len(a)
    m = [list(row) for row in a]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse. Raises ``ZeroDivisionError`` for singular input."""
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def leading_minors(a: Matrix) -> list[Fraction]:
    return [det(tuple(row[:k] for row in a[:k])) for k in range(1, len(a) + 1)]


def ldl(a: Matrix) -> tuple[Matrix, tuple[Fraction, ...]]:
    """Exact ``A = L D L^T`` with ``L`` unit lower triangular.

    Requires every leading principal minor to be nonzero (true for positive
    definite input).
    """
    n = len(a)
    L = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        d[j] = a[j][j] - sum((L[j][k] ** 2 * d[k] for k in range(j)), Fraction(0))
        if d[j] == 0:
            raise ZeroDivisionError(f"zero pivot at index {j}")
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            s = a[i][j] - sum((L[i][k] * L[j][k] * d[k] for k in range(j)), Fraction(0))
            L[i][j] = s / d[j]
    return tuple(tuple(r) for r in L), tuple(d)


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def common_denominator(a: Matrix) -> int:
    return lcm(*(x.denominator for row in a for x in row))


def is_integral(a: Matrix) -> bool:
    return all(x.denominator == 1 for row in a for x in row)


def integer_row_basis(vectors: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Echelon basis of the integer span of ``vectors`` in Z^n (gcd row reduction)."""
    rows = [list(map(int, v)) for v in vectors if any(v)]
    rank = 0
    for col in range(n):
        live = [r for r in rows[rank:] if r[col] != 0]
        if not live:
            continue
        rest = [r for r in rows[rank:] if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        rows = rows[:rank] + live + rest
        rank += 1
    return rows[:rank]


def integer_rank_and_index(vectors: Sequence[Sequence[int]], n: int) -> tuple[int, int]:
    """Rank of the integer span of ``vectors`` in Z^n and its index in Z^n
    (0 when the rank is below n)."""
    basis = integer_row_basis(vectors, n)
    if len(basis) < n:
        return len(basis), 0
    index = 1
    for i, row in enumerate(basis):
        pivot = next(x for x in row if x != 0)
        index *= abs(pivot)
    return n, index

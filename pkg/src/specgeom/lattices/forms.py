"""Lattice bases, Gram matrices and their arithmetic invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from specgeom.lattices import exact
from specgeom.lattices.exact import Matrix


class LatticeError(ValueError):
    """Invalid lattice or quadratic-form input."""


class RankError(LatticeError):
    """The basis does not have full rank."""


class NotPositiveDefiniteError(LatticeError):
    def __init__(self, minor_index: int, minor: Fraction):
        self.minor_index = minor_index
        self.minor = minor
        super().__init__(f"not positive definite: leading principal minor {minor_index} is {minor}")


@dataclass(frozen=True)
class LatticeBasis:
    """Full-rank basis; ``columns[j]`` is the j-th basis vector."""

    columns: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(exact.to_fraction(x) for x in c) for c in self.columns)
        n = len(cols)
        if n == 0:
            raise LatticeError("dimension-0 lattices are not supported")
        if any(len(c) != n for c in cols):
            raise LatticeError(f"basis must be square: {n} columns of lengths {[len(c) for c in cols]}")
        object.__setattr__(self, "columns", cols)
        if exact.det(self.matrix) == 0:
            raise RankError("basis vectors are linearly dependent")

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable]) -> "LatticeBasis":
        """Build from a row-major matrix whose columns are the basis vectors."""
        return cls(exact.transpose(exact.matrix(rows)))

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def matrix(self) -> Matrix:
        """Row-major basis matrix (basis vectors as columns)."""
        return exact.transpose(self.columns)

    def transform(self, u: Iterable[Iterable]) -> "LatticeBasis":
        """Basis ``B @ U`` for an integer matrix ``U``."""
        return LatticeBasis.from_matrix(exact.matmul(self.matrix, exact.matrix(u)))


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric positive definite Gram matrix with exact entries."""

    entries: Matrix

    def __post_init__(self):
        entries = exact.matrix(self.entries)
        n = len(entries)
        if n == 0:
            raise LatticeError("dimension-0 forms are not supported")
        if any(len(r) != n for r in entries):
            raise LatticeError("Gram matrix must be square")
        if not exact.is_symmetric(entries):
            raise LatticeError("Gram matrix must be symmetric")
        for k, minor in enumerate(exact.leading_minors(entries), start=1):
            if minor <= 0:
                raise NotPositiveDefiniteError(k, minor)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> Fraction:
        return exact.det(self.entries)

    def inverse(self) -> "GramMatrix":
        return GramMatrix(exact.inverse(self.entries))

    def is_integral(self) -> bool:
        return exact.is_integral(self.entries)

    def value(self, x) -> Fraction:
        """The quadratic form ``x^T G x``."""
        g = self.entries
        return sum((g[i][j] * x[i] * x[j] for i in range(self.n) for j in range(self.n)), Fraction(0))

    def conjugate(self, u: Iterable[Iterable]) -> "GramMatrix":
        """``U^T G U``."""
        u = exact.matrix(u)
        return GramMatrix(exact.matmul(exact.transpose(u), exact.matmul(self.entries, u)))

    def int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise LatticeError("Gram matrix is not integral")
        return [[int(x) for x in row] for row in self.entries]


def gram_of_basis(basis: LatticeBasis) -> GramMatrix:
    cols = basis.columns
    n = basis.n
    return GramMatrix(
        tuple(
            tuple(sum((a * b for a, b in zip(cols[i], cols[j])), Fraction(0)) for j in range(n))
            for i in range(n)
        )
    )


def dual_basis(basis: LatticeBasis) -> LatticeBasis:
    """Basis of the dual lattice: the inverse transpose of the basis matrix."""
    return LatticeBasis.from_matrix(exact.transpose(exact.inverse(basis.matrix)))


def block_diagonal(*blocks: GramMatrix | Matrix) -> Matrix:
    mats = [b.entries if isinstance(b, GramMatrix) else exact.matrix(b) for b in blocks]
    n = sum(len(m) for m in mats)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for m in mats:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(m)
    return tuple(tuple(r) for r in out)


def _is_even_matrix(m: Matrix) -> bool:
    return exact.is_integral(m) and all(m[i][i].numerator % 2 == 0 for i in range(len(m)))


def is_even(gram: GramMatrix) -> bool:
    """Integral with even diagonal, i.e. every lattice vector has even norm."""
    return _is_even_matrix(gram.entries)


def _require_even(gram: GramMatrix, what: str = "form") -> None:
    if not is_even(gram):
        raise LatticeError(f"{what} is not even (needs integer entries and an even diagonal)")


def level(gram: GramMatrix) -> int:
    """Smallest ``N >= 1`` such that ``N * G^-1`` is even."""
    _require_even(gram)
    inv = exact.inverse(gram.entries)
    n0 = exact.common_denominator(inv)
    scaled = exact.scale(inv, n0)
    if all(scaled[i][i].numerator % 2 == 0 for i in range(len(inv))):
        return n0
    return 2 * n0


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def mu0(n: int) -> Fraction:
    """``N * prod(1 + 1/p)`` over the distinct primes dividing N."""
    if n < 1:
        raise ValueError("mu0 is defined for N >= 1")
    out = Fraction(n)
    for p in prime_factors(n):
        out *= 1 + Fraction(1, p)
    return out

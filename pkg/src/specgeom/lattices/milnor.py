"""Bases for the even lattices E_{4m} and the pair E16, E8 + E8."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from specgeom.lattices.forms import LatticeBasis, LatticeError

HALF = Fraction(1, 2)


def milnor_basis(m: int) -> LatticeBasis:
    """Basis of E_{4m}: (1,1)=2, unit diagonal, -1 superdiagonal, last column 1/2."""
    if m < 1:
        raise LatticeError("milnor_basis needs m >= 1")
    size = 4 * m
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[0][0] = Fraction(2)
    for i in range(1, size - 1):
        rows[i][i] = Fraction(1)
    for i in range(size - 2):
        rows[i][i + 1] = Fraction(-1)
    for i in range(size):
        rows[i][size - 1] = HALF
    return LatticeBasis.from_matrix(rows)


def in_e_lattice(v: Sequence[Fraction]) -> bool:
    """Membership in E_n: all coordinates in Z or all in 1/2 + Z, with even sum."""
    v = [Fraction(x) for x in v]
    integral = all(x.denominator == 1 for x in v)
    half = all((x - HALF).denominator == 1 for x in v)
    if not (integral or half):
        return False
    total = sum(v, Fraction(0))
    return total.denominator == 1 and total.numerator % 2 == 0


def e8_basis() -> LatticeBasis:
    return milnor_basis(2)


def e16_basis() -> LatticeBasis:
    return milnor_basis(4)


def e8xe8_basis() -> LatticeBasis:
    a8 = e8_basis().matrix
    rows = [list(r) + [Fraction(0)] * 8 for r in a8] + [[Fraction(0)] * 8 + list(r) for r in a8]
    return LatticeBasis.from_matrix(rows)

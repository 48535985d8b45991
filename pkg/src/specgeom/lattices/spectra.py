"""Representation numbers, flat-torus spectra and the isospectrality certificate."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from specgeom.lattices import exact
from specgeom.lattices.enumerate import norm_histogram, rational_norm_histogram
from specgeom.lattices.forms import (
    GramMatrix,
    LatticeBasis,
    LatticeError,
    _require_even,
    gram_of_basis,
    level,
    mu0,
)


@dataclass(frozen=True)
class RepresentationTable:
    form: GramMatrix
    entries: dict[int, int]

    def __getitem__(self, t: int) -> int:
        return self.entries.get(t, 0)

    def up_to(self, bound: int) -> dict[int, int]:
        return {t: self[t] for t in range(bound + 1)}


def representation_table(gram: GramMatrix, bound: int) -> RepresentationTable:
    """``R(q, t)`` for every integer ``0 <= t <= bound``; zero entries are kept."""
    if not gram.is_integral():
        raise LatticeError("representation numbers need an integral form")
    hist = norm_histogram(gram.int_rows(), bound)
    return RepresentationTable(gram, {t: hist.get(t, 0) for t in range(bound + 1)})


def representation_number(gram: GramMatrix, t: int) -> int:
    if t < 0:
        return 0
    return representation_table(gram, t)[t]


@dataclass(frozen=True)
class TorusSpectrum:
    """Spectrum of R^n / lattice up to a cutoff on the dual norm.

    Each line is ``(norm_sq, multiplicity)``; the eigenvalue is
    ``4 pi^2 * norm_sq``.
    """

    cutoff: Fraction
    lines: tuple[tuple[Fraction, int], ...]

    def eigenvalues(self) -> list[tuple[float, int]]:
        return [(4 * math.pi**2 * float(s), m) for s, m in self.lines]

    def multiset(self) -> dict[Fraction, int]:
        return dict(self.lines)


def torus_spectrum(basis: LatticeBasis | GramMatrix, cutoff_norm_sq) -> TorusSpectrum:
    """Lines with dual norm ``<= cutoff``; a Gram matrix stands for any basis realizing it."""
    cutoff = exact.to_fraction(cutoff_norm_sq)
    if cutoff < 0:
        raise LatticeError("cutoff must be nonnegative")
    gram = basis if isinstance(basis, GramMatrix) else gram_of_basis(basis)
    dual_gram = exact.inverse(gram.entries)
    hist = rational_norm_histogram(dual_gram, cutoff)
    return TorusSpectrum(cutoff, tuple(sorted(hist.items())))


@dataclass
class CertificateReport:
    det_p: Fraction
    det_q: Fraction
    level_p: Optional[int]
    level_q: Optional[int]
    mu0: Optional[Fraction]
    t_bound: Optional[Fraction]
    checked_ts: list[int] = field(default_factory=list)
    counts_p: dict[int, int] = field(default_factory=dict)
    counts_q: dict[int, int] = field(default_factory=dict)
    verdict: str = "not-isospectral"
    first_discrepancy: Optional[str | int] = None

    @property
    def isospectral(self) -> bool:
        return self.verdict == "isospectral"

    def to_dict(self) -> dict:
        def frac(x):
            return None if x is None else str(x)

        return {
            "det_p": frac(self.det_p),
            "det_q": frac(self.det_q),
            "level_p": self.level_p,
            "level_q": self.level_q,
            "mu0": frac(self.mu0),
            "t_bound": frac(self.t_bound),
            "checked_ts": list(self.checked_ts),
            "counts_p": {str(t): c for t, c in self.counts_p.items()},
            "counts_q": {str(t): c for t, c in self.counts_q.items()},
            "verdict": self.verdict,
            "first_discrepancy": self.first_discrepancy,
        }


def certificate_isospectral(p: GramMatrix, q: GramMatrix) -> CertificateReport:
    """Decide isospectrality of two even positive definite forms in 2k variables.

    Compares determinants, levels, then ``R(p,t) = R(q,t)`` for every
    integer ``t`` in ``[0, mu0(N_P) k / 12 + 1]``.
    """
    if p.n != q.n:
        raise LatticeError(f"dimension mismatch: {p.n} vs {q.n}")
    if p.n % 2:
        raise LatticeError(f"dimension {p.n} is odd; the certificate needs 2k variables")
    _require_even(p, "first form")
    _require_even(q, "second form")
    k = p.n // 2
    report = CertificateReport(p.det, q.det, None, None, None, None)
    if report.det_p != report.det_q:
        report.first_discrepancy = "determinant"
        return report
    report.level_p, report.level_q = level(p), level(q)
    if report.level_p != report.level_q:
        report.first_discrepancy = "level"
        return report
    report.mu0 = mu0(report.level_p)
    report.t_bound = report.mu0 * k / 12 + 1
    top = math.floor(report.t_bound)
    table_p = representation_table(p, top)
    table_q = representation_table(q, top)
    report.checked_ts = list(range(top + 1))
    report.counts_p = table_p.up_to(top)
    report.counts_q = table_q.up_to(top)
    for t in report.checked_ts:
        if table_p[t] != table_q[t]:
            report.first_discrepancy = t
            return report
    report.verdict = "isospectral"
    return report

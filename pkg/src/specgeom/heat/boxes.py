"""Spectra of boxes (0, l_1) x ... x (0, l_n): eigenvalues, counting, bracketing, heat traces.

Eigenvalues are ``pi^2 * q`` with ``q = sum m_i^2 / l_i^2``. When every side
is rational ``q`` is kept as an exact Fraction, so ties and inequalities are
decided exactly.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np
from scipy.special import gammaincc, gamma

PI2 = math.pi**2
# slack on lambda when deciding "<= lambda" from floats; both counting paths use it
_SLACK = 1e-12


class BoundaryCondition(enum.Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"

    @property
    def first_index(self) -> int:
        return 1 if self is BoundaryCondition.DIRICHLET else 0

    @classmethod
    def parse(cls, value) -> "BoundaryCondition":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"boundary condition must be 'dirichlet' or 'neumann', got {value!r}") from None


def _side(x):
    if isinstance(x, bool):
        raise TypeError("side length cannot be a boolean")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return float(x)
    return float(x)


@dataclass(frozen=True)
class BoxSpec:
    side_lengths: tuple

    def __post_init__(self):
        sides = tuple(_side(x) for x in self.side_lengths)
        if not sides:
            raise ValueError("a box needs at least one side")
        if any(not s > 0 for s in sides):
            raise ValueError(f"side lengths must be positive, got {sides}")
        object.__setattr__(self, "side_lengths", sides)

    @property
    def n(self) -> int:
        return len(self.side_lengths)

    @property
    def exact(self) -> bool:
        return all(isinstance(s, Fraction) for s in self.side_lengths)

    @property
    def volume(self) -> float:
        return float(math.prod(self.side_lengths))

    @property
    def boundary_measure(self) -> float:
        sides = [float(s) for s in self.side_lengths]
        if self.n == 1:
            return 2.0
        return 2.0 * sum(math.prod(sides[:i] + sides[i + 1:]) for i in range(self.n))

    def inverse_squares(self) -> list:
        return [1 / (s * s) for s in self.side_lengths]


@dataclass(frozen=True)
class EigenLine:
    value: float
    multiplicity: int
    index_witnesses: tuple[tuple[int, ...], ...]
    scaled: Fraction | float
    """``value / pi^2``; exact when the box sides are rational."""


def _within(q: float, lam: float) -> bool:
    return q * PI2 <= lam * (1 + _SLACK)


def _index_tuples(box: BoxSpec, bc: BoundaryCondition, lam: float):
    inv = box.inverse_squares()
    invf = [float(c) for c in inv]
    start = bc.first_index
    qmax = lam * (1 + _SLACK) / PI2

    def rec(i, prefix, partial):
        if i == box.n:
            yield prefix
            return
        m = start
        while partial + m * m * invf[i] <= qmax * (1 + 1e-15) + 1e-300:
            yield from rec(i + 1, prefix + (m,), partial + m * m * invf[i])
            m += 1

    for idx in rec(0, (), 0.0):
        q = sum((m * m * c for m, c in zip(idx, inv)), Fraction(0) if box.exact else 0.0)
        if _within(float(q), lam):
            yield idx, q


def box_eigenvalues(box: BoxSpec, bc, lam_max: float) -> list[EigenLine]:
    """All eigenvalues ``<= lam_max`` grouped into lines with multiplicity."""
    bc = BoundaryCondition.parse(bc)
    if lam_max < 0:
        return []
    found = list(_index_tuples(box, bc, lam_max))
    groups: list[tuple] = []
    if box.exact:
        by_q: dict[Fraction, list] = {}
        for idx, q in found:
            by_q.setdefault(q, []).append(idx)
        groups = sorted(by_q.items())
    else:
        warnings.warn("irrational side lengths: multiplicities are grouped within 1e-12 relative", stacklevel=2)
        found.sort(key=lambda p: p[1])
        for idx, q in found:
            if groups and abs(q - groups[-1][0]) <= 1e-12 * max(abs(q), 1e-300):
                groups[-1][1].append(idx)
            else:
                groups.append((q, [idx]))
    return [EigenLine(PI2 * float(q), len(w), tuple(sorted(w)), q) for q, w in groups]


def counting_function(box: BoxSpec, bc, lam: float) -> int:
    """``N(lam)``: eigenvalues ``<= lam`` with multiplicity, by lattice-point counting.

    Independent of :func:`box_eigenvalues`: the first ``n - 1`` coordinates
    are expanded as arrays of partial sums and the last one is counted in
    blocks against them.
    """
    bc = BoundaryCondition.parse(bc)
    if lam < 0:
        return 0
    inv = [float(c) for c in box.inverse_squares()]
    qmax = lam * (1 + _SLACK) / PI2
    start = bc.first_index
    partial = np.zeros(1)
    for c in inv[:-1]:
        mmax = int(math.sqrt(qmax / c)) + 1
        m = np.arange(start, mmax + 1, dtype=float)
        partial = (partial[:, None] + c * m[None, :] ** 2).ravel()
        partial = partial[partial <= qmax]
    mmax = int(math.sqrt(qmax / inv[-1])) + 1
    last = inv[-1] * np.arange(start, mmax + 1, dtype=float) ** 2
    # same predicate as _within, applied to partial + last
    counts = np.zeros(len(partial), dtype=np.int64)
    for lo in range(0, len(partial), 1 << 16):
        p = partial[lo:lo + (1 << 16)]
        ok = (p[:, None] + last[None, :]) * PI2 <= lam * (1 + _SLACK)
        counts[lo:lo + len(p)] = ok.sum(axis=1)
    return int(counts.sum())


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def weyl_constant(n: int, volume: float) -> float:
    """``omega_n * volume / (2 pi)^n``: leading coefficient of ``N(lam) ~ C lam^(n/2)``."""
    if n < 1 or not volume > 0:
        raise ValueError("need n >= 1 and positive volume")
    return unit_ball_volume(n) * volume / (2 * math.pi) ** n


def weyl_ratio(box: BoxSpec, bc, lam: float) -> tuple[int, float]:
    """``(N(lam), N(lam) / (C lam^(n/2)))`` with the ratio reported as 0 at lam = 0."""
    count = counting_function(box, bc, lam)
    if lam <= 0:
        return count, 0.0
    return count, count / (weyl_constant(box.n, box.volume) * lam ** (box.n / 2))


# -- bracketing -----------------------------------------------------------------


@dataclass(frozen=True)
class SubBox:
    origin: tuple
    sides: tuple

    def __post_init__(self):
        object.__setattr__(self, "origin", tuple(_side(x) if x != 0 else Fraction(0) for x in self.origin))
        object.__setattr__(self, "sides", tuple(_side(x) for x in self.sides))

    def spec(self) -> BoxSpec:
        return BoxSpec(self.sides)


class PartitionError(ValueError):
    pass


def check_tiling(box: BoxSpec, parts: Sequence[SubBox]) -> None:
    n = box.n
    for k, p in enumerate(parts):
        if len(p.origin) != n or len(p.sides) != n:
            raise PartitionError(f"piece {k} has the wrong dimension")
        for o, s, L in zip(p.origin, p.sides, box.side_lengths):
            if o < 0 or not s > 0 or o + s > L:
                raise PartitionError(f"piece {k} is not inside the box")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            a, b = parts[i], parts[j]
            if all(
                min(ao + asd, bo + bsd) > max(ao, bo)
                for ao, asd, bo, bsd in zip(a.origin, a.sides, b.origin, b.sides)
            ):
                raise PartitionError(f"pieces {i} and {j} overlap")
    total = sum(math.prod(p.sides) for p in parts)
    target = math.prod(box.side_lengths)
    if box.exact and all(isinstance(s, Fraction) for p in parts for s in p.sides):
        if total != target:
            raise PartitionError(f"pieces cover volume {total}, box has {target}")
    elif not math.isclose(float(total), float(target), rel_tol=1e-12):
        raise PartitionError(f"pieces cover volume {float(total)}, box has {float(target)}")


def first_scaled_eigenvalues(box: BoxSpec, bc, k: int) -> list:
    """The ``k`` smallest values of ``lambda / pi^2`` with multiplicity."""
    bc = BoundaryCondition.parse(bc)
    lam = max((k / weyl_constant(box.n, box.volume)) ** (2 / box.n), PI2)
    while True:
        vals = sorted(q for _, q in _index_tuples(box, bc, lam))
        if len(vals) >= k:
            return vals[:k]
        lam *= 2


@dataclass
class BracketingReport:
    K: int
    neumann_union: list
    box_dirichlet: list
    dirichlet_union: list
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def bracketing_check(box: BoxSpec, parts: Sequence[SubBox], K: int) -> BracketingReport:
    """Check ``mu~_k <= lambda_k <= lambda~_k`` for ``k = 1..K``.

    ``mu~`` merges the Neumann spectra of the pieces, ``lambda~`` merges their
    Dirichlet spectra and ``lambda`` is the Dirichlet spectrum of the box.
    Values are ``eigenvalue / pi^2``, exact for rational boxes.
    """
    check_tiling(box, parts)
    neu = sorted(q for p in parts for q in first_scaled_eigenvalues(p.spec(), BoundaryCondition.NEUMANN, K))[:K]
    dir_union = sorted(q for p in parts for q in first_scaled_eigenvalues(p.spec(), BoundaryCondition.DIRICHLET, K))[:K]
    whole = first_scaled_eigenvalues(box, BoundaryCondition.DIRICHLET, K)
    report = BracketingReport(K, neu, whole, dir_union)
    for k in range(K):
        if not neu[k] <= whole[k]:
            report.violations.append((k + 1, "neumann_union > box_dirichlet", neu[k], whole[k]))
        if not whole[k] <= dir_union[k]:
            report.violations.append((k + 1, "box_dirichlet > dirichlet_union", whole[k], dir_union[k]))
    return report


# -- heat trace -------------------------------------------------------------------


def _tail_bound(box: BoxSpec, t: float, cutoff: float) -> float:
    """Upper bound on the sum of ``exp(-lam t)`` over eigenvalues above ``cutoff``.

    Uses ``N(lam) <= prod(1 + l_i sqrt(lam) / pi)`` (the Neumann box count,
    which dominates Dirichlet) inside ``int_cutoff^inf t e^{-lam t} N(lam) dlam``.
    """
    coeffs = np.array([1.0])
    for side in box.side_lengths:
        coeffs = np.convolve(coeffs, [1.0, float(side) / math.pi])
    x = cutoff * t
    total = 0.0
    for k, c in enumerate(coeffs):
        s = k / 2 + 1
        total += c * t ** (-k / 2) * gamma(s) * gammaincc(s, x)
    return float(total)


@dataclass(frozen=True)
class HeatTraceSum:
    value: float
    tail_bound: float
    cutoff: float
    terms: int


def heat_trace_eigensum(box: BoxSpec, bc, t: float, tail_tol: float = 1e-12) -> HeatTraceSum:
    """``sum exp(-lam_n t)`` with a certified bound on the truncated tail."""
    bc = BoundaryCondition.parse(bc)
    if not t > 0:
        raise ValueError(f"time must be positive, got {t!r}")
    cutoff = 10.0 / t
    while _tail_bound(box, t, cutoff) > tail_tol:
        cutoff *= 1.5
    inv = [float(c) for c in box.inverse_squares()]
    qmax = cutoff / PI2
    partial = np.zeros(1)
    for c in inv:
        m = np.arange(bc.first_index, int(math.sqrt(qmax / c)) + 2, dtype=float)
        partial = (partial[:, None] + c * m[None, :] ** 2).ravel()
        partial = partial[partial <= qmax]
    terms = np.exp(-PI2 * t * np.sort(partial)[::-1])
    return HeatTraceSum(math.fsum(terms), _tail_bound(box, t, cutoff), cutoff, len(partial))

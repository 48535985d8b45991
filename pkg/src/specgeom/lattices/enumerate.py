"""Exact enumeration of integer vectors in the ellipsoid ``x^T G x <= T``.

Coordinates are bounded recursively from an exact rational ``G = L D L^T``.
Every quantity that decides membership is an integer after scaling by a
common denominator, so the counts are exact; numpy is only used to batch
the integer arithmetic. The search runs breadth-first over coordinates but
splits the frontier into chunks, which bounds memory and makes the result
independent of how the work is partitioned.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

import numpy as np

from specgeom.lattices import exact
from specgeom.lattices.reduce import size_reduce

CHUNK = 1 << 15
_INT64_SAFE = 1 << 61


class _Plan:
    """Integer-scaled LDL^T data for one integral positive definite Gram."""

    def __init__(self, rows: list[list[int]], bound: int):
        g = exact.matrix(rows)
        L, d = exact.ldl(g)
        n = len(rows)
        self.n = n
        self.s = [exact.lcm(*(L[k][i].denominator for k in range(i + 1, n))) for i in range(n)]
        self.W = exact.lcm(*(self.s[i] ** 2 * d[i].denominator for i in range(n)))
        w = [d[i] * self.W / self.s[i] ** 2 for i in range(n)]
        assert all(x.denominator == 1 for x in w)
        self.w = [int(x) for x in w]
        coeff = [[0] * n for _ in range(n)]
        for i in range(n):
            for k in range(i + 1, n):
                c = self.s[i] * L[k][i]
                assert c.denominator == 1
                coeff[i][k] = int(c)
        self.WT = self.W * bound
        # |x_k| <= sqrt(T * (G^-1)_kk) by Cauchy-Schwarz
        inv = exact.inverse(g)
        xmax = max(math.isqrt(int(bound * inv[k][k]) + 1) + 1 for k in range(n))
        cmax = max((abs(c) for row in coeff for c in row), default=0)
        smax = max(self.s)
        magnitude = max(4 * self.WT, n * (cmax + smax) * xmax * 4 + 4)
        self.dtype = np.int64 if magnitude < _INT64_SAFE else object
        self.coeff = np.array(coeff, dtype=self.dtype)


def _isqrt(v: np.ndarray) -> np.ndarray:
    if v.dtype == object:
        return np.array([math.isqrt(int(x)) for x in v], dtype=object)
    r = np.floor(np.sqrt(v.astype(np.float64))).astype(np.int64)
    for _ in range(2):
        r = np.where(r * r > v, r - 1, r)
    for _ in range(2):
        r = np.where((r + 1) * (r + 1) <= v, r + 1, r)
    return r


def _walk(plan: _Plan, level: int, A, P, X, sink: Callable) -> None:
    s = plan.s[level]
    w = plan.w[level]
    Pl = P[:, level]
    B = _isqrt((plan.WT - A) // w)
    hi = (B - Pl) // s
    lo = -((B + Pl) // s)
    cnt = hi - lo + 1
    cnt = np.where(cnt > 0, cnt, 0).astype(np.int64)
    total = int(cnt.sum())
    if total == 0:
        return
    idx = np.repeat(np.arange(len(A)), cnt)
    start = np.repeat(np.cumsum(cnt) - cnt, cnt)
    x = lo[idx] + (np.arange(total) - start).astype(plan.dtype)
    Y = s * x + Pl[idx]
    A2 = A[idx] + w * Y * Y
    X2 = None if X is None else np.column_stack([x, X[idx]])
    if level == 0:
        sink(A2, X2)
        return
    P2 = P[idx, :level] + x[:, None] * plan.coeff[:level, level][None, :]
    for lo_i in range(0, total, CHUNK):
        sl = slice(lo_i, lo_i + CHUNK)
        _walk(plan, level - 1, A2[sl], P2[sl], None if X2 is None else X2[sl], sink)


def _run(plan: _Plan, keep_vectors: bool, sink: Callable) -> None:
    A = np.zeros(1, dtype=plan.dtype)
    P = np.zeros((1, plan.n), dtype=plan.dtype)
    X = np.zeros((1, 0), dtype=plan.dtype) if keep_vectors else None
    if plan.WT >= 0:
        _walk(plan, plan.n - 1, A, P, X, sink)


def norm_histogram(rows: list[list[int]], bound: int) -> dict[int, int]:
    """Counts of integer vectors by norm ``x^T G x`` for every norm ``<= bound``.

    ``rows`` must be an integral positive definite Gram matrix.
    """
    scaled: dict[int, int] = {}
    plan = _Plan(rows, bound)

    def sink(A2, _X):
        if A2.dtype != object and plan.WT < 1 << 24:
            counts = np.bincount(A2.astype(np.int64))
            for k in np.flatnonzero(counts):
                scaled[int(k)] = scaled.get(int(k), 0) + int(counts[k])
        else:
            vals, counts = np.unique(A2, return_counts=True)
            for v, c in zip(vals, counts):
                scaled[int(v)] = scaled.get(int(v), 0) + int(c)

    _run(plan, False, sink)
    W = plan.W
    out: dict[int, int] = {}
    for a, c in scaled.items():
        t, rem = divmod(a, W)
        assert rem == 0, "integral form produced a non-integral norm"
        out[t] = out.get(t, 0) + c
    return out


def short_vectors(rows: list[list[int]], bound: int) -> tuple[np.ndarray, list[int]]:
    """All integer vectors with ``x^T G x <= bound`` and their norms, sorted by norm."""
    vecs: list[np.ndarray] = []
    vals: list[np.ndarray] = []

    def sink(A2, X2):
        vecs.append(X2)
        vals.append(A2)

    plan = _Plan(rows, bound)
    _run(plan, True, sink)
    if not vecs:
        return np.zeros((0, len(rows)), dtype=np.int64), []
    X = np.concatenate(vecs)
    A = np.concatenate(vals)
    norms = [int(a) // plan.W for a in A]
    order = sorted(range(len(norms)), key=lambda i: (norms[i], tuple(int(v) for v in X[i])))
    return X[order].astype(np.int64), [norms[i] for i in order]


def scaled_integral(gram) -> tuple[list[list[int]], int]:
    """Scale a rational Gram to an integral one: returns ``(rows, D)`` with ``rows = D * G``."""
    D = exact.common_denominator(gram)
    return [[int(x * D) for x in row] for row in gram], D


def rational_norm_histogram(gram, cutoff: Fraction) -> dict[Fraction, int]:
    """Like :func:`norm_histogram` for a rational Gram and rational cutoff."""
    rows, D = scaled_integral(gram)
    # counts are basis-independent; a reduced basis keeps the search tree small
    rows, _ = size_reduce(rows)
    bound = math.floor(Fraction(cutoff) * D)
    return {Fraction(t, D): c for t, c in norm_histogram(rows, bound).items()}

"""Orthogonal decomposition of a lattice into irreducible summands.

Indecomposable short vectors each lie in exactly one irreducible summand, and
two of them lie in the same summand iff they are joined by a chain of
non-orthogonal pairs. The summands are the connected components of that
graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from specgeom.lattices import exact
from specgeom.lattices.enumerate import short_vectors
from specgeom.lattices.reduce import size_reduce
from specgeom.lattices.forms import GramMatrix, LatticeError

MAX_RETRIES = 3


class GeneratingSetError(LatticeError):
    """Short vectors up to the norm bound do not generate the lattice."""


@dataclass(frozen=True)
class Decomposition:
    summands: tuple[tuple[tuple[int, ...], ...], ...]
    """Integer coordinate bases (w.r.t. the input basis), one per summand."""
    norm_bound: int

    @property
    def count(self) -> int:
        return len(self.summands)

    def dimensions(self) -> list[int]:
        return [len(b) for b in self.summands]

    def grams(self, gram: GramMatrix) -> list[GramMatrix]:
        out = []
        for basis in self.summands:
            cols = exact.transpose(exact.matrix(basis))
            out.append(GramMatrix(exact.matmul(exact.matrix(basis), exact.matmul(gram.entries, cols))))
        return out


def _indecomposable(vecs: np.ndarray, norms: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Mask of vectors v with no shorter x (of either sign) such that x.v >= x.x.

    ``vecs`` holds one vector per +-pair, sorted by norm.
    """
    keep = np.ones(len(vecs), dtype=bool)
    if len(vecs) == 0:
        return keep
    shorter_cut = np.searchsorted(norms, norms, side="left")
    gv = vecs @ g
    for level in np.unique(norms):
        idx = np.flatnonzero(norms == level)
        m = shorter_cut[idx[0]]
        if m == 0:
            continue
        dots = vecs[:m] @ gv[idx].T
        keep[idx] = ~np.any(np.abs(dots) >= norms[:m, None], axis=0)
    return keep


def _components(vecs: np.ndarray, g: np.ndarray) -> list[list[int]]:
    """Connected components of the non-orthogonality graph, rows computed on demand.

    Inner products are bounded by the norm bound (Cauchy-Schwarz), so float64
    matmul is exact here.
    """
    left = vecs.astype(np.float64)
    right = (vecs @ g).astype(np.float64)
    seen = np.zeros(len(vecs), dtype=bool)
    out = []
    for start in range(len(vecs)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        frontier = np.array([start])
        while len(frontier):
            touched = np.zeros(len(vecs), dtype=bool)
            for lo in range(0, len(frontier), 512):
                block = right[frontier[lo:lo + 512]] @ left.T
                touched |= np.any(block != 0, axis=0)
            frontier = np.flatnonzero(touched & ~seen)
            seen[frontier] = True
            comp.extend(frontier.tolist())
        out.append(sorted(comp))
    return out


def orthogonal_decompose(gram: GramMatrix) -> Decomposition:
    rows = gram.int_rows()
    n = gram.n
    reduced, u = size_reduce(rows)
    bound = max(reduced[i][i] for i in range(n))
    g_np = np.array(rows, dtype=np.int64)
    u_np = np.array(u, dtype=np.int64)
    for _attempt in range(MAX_RETRIES + 1):
        ys, norms = short_vectors(reduced, bound)
        xs = ys @ u_np.T
        nz = np.array(norms) > 0
        xs, nrm = xs[nz], np.array(norms, dtype=np.int64)[nz]
        # one representative per +-pair: first nonzero coordinate positive
        first = xs[np.arange(len(xs)), np.argmax(xs != 0, axis=1)]
        xs, nrm = xs[first > 0], nrm[first > 0]
        mask = _indecomposable(xs, nrm, g_np)
        xs = xs[mask]
        comps = _components(xs, g_np)
        bases = [exact.integer_row_basis(xs[c].tolist(), n) for c in comps]
        _, index = exact.integer_rank_and_index([v for b in bases for v in b], n)
        if index == 1:
            bases.sort(key=lambda b: (len(b), b))
            return Decomposition(tuple(tuple(tuple(v) for v in b) for b in bases), bound)
        bound *= 2
    raise GeneratingSetError(
        f"short vectors up to norm {bound // 2} do not generate the lattice; "
        "retry with a larger norm bound"
    )

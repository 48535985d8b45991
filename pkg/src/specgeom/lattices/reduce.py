"""Pairwise size reduction of integral Gram matrices."""

from __future__ import annotations

from fractions import Fraction


def size_reduce(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Greedy pairwise (Lagrange-style) reduction.

    Returns the reduced Gram and ``U`` whose columns express the reduced
    basis in the input basis.
    """
    n = len(rows)
    g = [list(r) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or 2 * abs(g[i][j]) <= g[j][j]:
                    continue
                q = round(Fraction(g[i][j], g[j][j]))
                # b_i <- b_i - q b_j
                for k in range(n):
                    u[k][i] -= q * u[k][j]
                gii = g[i][i] - 2 * q * g[i][j] + q * q * g[j][j]
                for k in range(n):
                    if k != i:
                        g[i][k] -= q * g[j][k]
                        g[k][i] = g[i][k]
                g[i][i] = gii
                changed = True
    return g, u

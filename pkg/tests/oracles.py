"""Independent reference values and brute-force counters used across the tests.

The float tables were produced with mpmath at 30 digits (tanh-sinh quadrature
on [0, 1/4, 1, 4, inf]) and are frozen here so the suite has no slow oracle
runs.
"""

import math
import random
from fractions import Fraction

import numpy as np

from specgeom.lattices import exact

# theta / pi -> (corner integral over the real line, corner coefficient)
CARSLAW = {
    Fraction(11, 20): (2.4564125600470771279, 0.052840909090909090909),
    Fraction(3, 5): (1.2898128812332215826, 0.044444444444444444444),
    Fraction(2, 3): (0.87266462599716478846, 0.034722222222222222222),
    Fraction(3, 4): (0.70536641942441805301, 0.024305555555555555556),
    Fraction(4, 5): (0.66643244072375493705, 0.01875),
    Fraction(9, 10): (0.64638017058382026891, 0.0087962962962962962963),
    Fraction(19, 20): (0.65297126695241525855, 0.0042763157894736842105),
    Fraction(1): (0.66666666666666666667, 0.0),
}

# half-line integral of 1/((1 + cosh s)(cosh(4s/3) - 1/2))
AUX_BOUND_INTEGRAL = 0.769098052121832062841480377637

# N -> N * c(pi (N - 2) / N)
NGON_CORNER_SUM = {
    5: 0.22222222222222222222,
    10: 0.1875,
    20: 0.17592592592592592593,
    40: 0.17105263157894736842,
    80: 0.16880341880341880342,
    100: 0.1683673469387755102,
    160: 0.16772151898734177215,
}

HALFPLANE_D1_T1 = 0.050302555783788087539


def exact_inverse(g):
    return exact.inverse(exact.matrix(g))


def _box_counts(g_int, radius, t_max):
    """Counts of ``x^T G x`` over the integer box ``|x_i| <= radius_i``, values ``<= t_max``."""
    axes = [np.arange(-r, r + 1, dtype=np.int64) for r in radius]
    pts = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    vals = np.einsum("ki,ij,kj->k", pts, np.array(g_int, dtype=np.int64), pts)
    vals = vals[vals <= t_max]
    uniq, cnt = np.unique(vals, return_counts=True)
    return {int(v): int(c) for v, c in zip(uniq, cnt)}


def brute_representations(g, t_max):
    """``{t: #{x : x^T G x = t}}`` for ``t <= t_max`` by scanning a box.

    The box uses ``x_i^2 <= t_max * (G^-1)_ii``, which contains every solution.
    """
    inv = exact_inverse(g)
    radius = [math.isqrt(math.floor(t_max * inv[i][i])) + 1 for i in range(len(g))]
    return _box_counts(g, radius, t_max)


def brute_dual_norms(g, cutoff):
    """``{s: count}`` of ``y^T G^-1 y = s <= cutoff`` over integer ``y``, exact."""
    inv = exact_inverse(g)
    d = exact.common_denominator(inv)
    scaled = [[int(x * d) for x in row] for row in inv]
    radius = [math.isqrt(math.floor(cutoff * Fraction(g[i][i]))) + 1 for i in range(len(g))]
    counts = _box_counts(scaled, radius, math.floor(cutoff * d))
    return {Fraction(v, d): c for v, c in counts.items()}


def random_even_form(rng: random.Random, n: int):
    """Small even positive definite Gram matrix: ``2 B^T B`` or a dominant-diagonal form."""
    while True:
        if rng.random() < 0.5:
            b = [[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)]
            for i in range(n):
                b[i][i] = rng.choice([1, 2]) * rng.choice([-1, 1])
            g = [[2 * sum(b[k][i] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        else:
            g = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    g[i][j] = g[j][i] = rng.randint(-1, 1)
                g[i][i] = 2 * rng.randint(max(1, n // 2), n)
        if all(m > 0 for m in exact.leading_minors(exact.matrix(g))):
            return g


def random_unimodular(rng: random.Random, n: int, steps: int = 6):
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            u = [[-x for x in row] for row in u]
            continue
        q = rng.choice([-1, 1])
        for row in u:
            row[j] += q * row[i]
    return u

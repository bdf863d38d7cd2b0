"""
Seeded random exact inputs.

All draws go through a ``numpy.random.Generator`` built on PCG64, so a seed
fixes every subspace, vector and multivector a verification run sees.
"""

import numpy as np
from gmpy2 import mpq

from .clifford import Multivector
from .linalg import rank
from .scalar import GaussianRational
from .subspace import span

RNG_ALGORITHM = "PCG64"
DEFAULT_BOUND = 5


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def random_rationals(rng, k, bound=DEFAULT_BOUND):
    """``k`` rationals p/q with |p| <= bound and 1 <= q <= bound, one draw."""
    nums = rng.integers(-bound, bound + 1, size=k)
    dens = rng.integers(1, bound + 1, size=k)
    return [mpq(int(p), int(q)) for p, q in zip(nums, dens)]


def random_rational(rng, bound=DEFAULT_BOUND):
    return random_rationals(rng, 1, bound)[0]


def random_scalars(rng, k, bound=DEFAULT_BOUND, real=False):
    if real:
        return [GaussianRational(x) for x in random_rationals(rng, k, bound)]
    parts = random_rationals(rng, 2 * k, bound)
    return [GaussianRational(a, b) for a, b in zip(parts[:k], parts[k:])]


def random_scalar(rng, bound=DEFAULT_BOUND, real=False):
    return random_scalars(rng, 1, bound, real)[0]


def random_row(rng, n, bound=DEFAULT_BOUND, real=False):
    return random_scalars(rng, n, bound, real)


def random_multivector(rng, n, terms=8, bound=DEFAULT_BOUND, real=False):
    """A random element with at most ``terms`` nonzero blades."""
    size = 1 << n
    k = min(terms, size)
    masks = rng.choice(size, size=k, replace=False)
    coeffs = random_scalars(rng, k, bound, real)
    return Multivector(n, {int(m): c for m, c in zip(masks, coeffs)})


def _isotropic_row(rng, n, bound):
    # v - iJv with J pairing coordinates (2k, 2k+1); n is even here
    v = random_rationals(rng, n, bound)
    jv = []
    for k in range(0, n, 2):
        jv += [-v[k + 1], v[k]]
    return [GaussianRational(a, -b) for a, b in zip(v, jv)]


def random_subspace(n, d, rng, bound=DEFAULT_BOUND, kind="complex"):
    """Span of ``d`` random vectors, redrawn until the span has dimension ``d``.

    ``kind`` is ``"complex"``, ``"real"`` or ``"isotropic"``; the last needs
    even ``n`` and ``d <= n // 2`` and yields a totally isotropic W (W ⊆ W^⊥).
    """
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n, got d=%d n=%d" % (d, n))
    if kind == "isotropic" and (n % 2 or 2 * d > n):
        raise ValueError("isotropic subspaces need even n and d <= n/2")
    if kind not in ("complex", "real", "isotropic"):
        raise ValueError("unknown subspace kind %r" % kind)
    while True:
        if kind == "isotropic":
            rows = [_isotropic_row(rng, n, bound) for _ in range(d)]
        else:
            rows = [random_row(rng, n, bound, real=kind == "real") for _ in range(d)]
        w = span(rows, n)
        if w.dim == d:
            return w


def random_recombination(rows, rng, bound=3):
    """Generators ``g_i = sum_j m_ij rows_j`` for a random invertible ``m``."""
    k = len(rows)
    if k == 0:
        return []
    while True:
        m = [random_scalars(rng, k, bound) for _ in range(k)]
        if rank([{j: c for j, c in enumerate(r) if c} for r in m]) == k:
            break
    n = len(rows[0])
    out = []
    for coeffs in m:
        g = [GaussianRational(0)] * n
        for c, r in zip(coeffs, rows):
            g = [a + c * b for a, b in zip(g, r)]
        out.append(g)
    return out

"""Exhaustive enumeration of ideal elements in an embedding region.

The region is a slab  r_lo <= x_real <= r_hi,  |x_complex| <= smax  in the
Minkowski space of L.  After scaling it into the cylinder of radius 1 and
half-height 1 (inside the ball of squared radius 2) the ideal lattice is LLL
reduced and a Fincke-Pohst enumeration lists every lattice point in that ball.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np

from .cubic_field import CubicField, FieldElement, FracIdeal
from .lattice import fincke_pohst, lll_rows

ROUND_BITS = 60
BALL = 2.0 * (1 + 1e-7)
TOL = 1e-9


def _log2(x) -> float:
    return abs(float(mpmath.log(x, 2))) if x else 0.0


def region_points(
    F: CubicField, I: FracIdeal, r_lo, r_hi, smax, signed: bool = False
) -> list[FieldElement]:
    """All nonzero x in the integral ideal I inside the slab (up to sign).

    Elements are returned with positive real embedding unless ``signed``; the
    result is exhaustive (floating rounding is covered by relative slack).
    """
    H = I.hnf
    gens = [[H[i][j] for i in range(3)] for j in range(3)]
    size = max(abs(x) for row in H for x in row).bit_length()
    spread = int(_log2(r_hi) + _log2(smax)) + 1
    rbits = ROUND_BITS + spread
    prec = 64 + rbits + size + spread
    with mpmath.workprec(prec):
        E = F.embedding_matrix(prec)
        sc = (1 / mpmath.mpf(r_hi), 1 / mpmath.mpf(smax), 1 / mpmath.mpf(smax))

        def scaled(v):
            return [sc[k] * sum(E[k, j] * v[j] for j in range(3)) for k in range(3)]

        rows = [[int(mpmath.nint(x * 2**rbits)) for x in scaled(g)] for g in gens]
        T = lll_rows(rows)
        red = [[sum(T[i][j] * gens[j][k] for j in range(3)) for k in range(3)] for i in range(3)]
        V = np.array([[float(x) for x in scaled(g)] for g in red])
    gram = V @ V.T
    lo = float(mpmath.mpf(r_lo) / mpmath.mpf(r_hi))
    out = []
    seen = set()
    for u in fincke_pohst(gram, BALL):
        if not any(u):
            continue
        y = np.array(u, dtype=float) @ V
        if not signed and y[0] < 0:
            continue
        if abs(y[0]) < lo * (1 - TOL) or abs(y[0]) > 1 + TOL:
            continue
        if y[1] * y[1] + y[2] * y[2] > 1 + TOL:
            continue
        c = tuple(sum(u[i] * red[i][k] for i in range(3)) for k in range(3))
        if c not in seen:
            seen.add(c)
            out.append(FieldElement(c))
    return out


def geometric_slabs(lo, hi, ratio: float = 2.0):
    """Cover [lo, hi] by intervals [t, ratio*t] (last one clipped)."""
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    t = lo
    while t < hi:
        yield t, min(t * ratio, hi)
        t = t * ratio
    if lo == hi:
        yield lo, hi


def integer_norm(F: CubicField, x: FieldElement) -> int:
    n = F.norm(x)
    return int(n) if n.denominator == 1 else math.inf

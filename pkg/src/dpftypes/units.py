"""Fundamental unit of a pure cubic field (unit rank one, torsion {+-1}).

A pure cubic field has one real and one pair of complex embeddings, so a unit
with real embedding u > 1 has complex embeddings of absolute value u^(-1/2) and
norm +1.  The fundamental unit is the smallest such u.  It is found by an
exhaustive sweep of the slabs [2^k L, 2^(k+1) L], where L^3 = (|disc| - 27)/4
is the classical lower bound for the fundamental unit of a complex cubic
field; the sweep itself certifies that no smaller unit exists.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import mpmath

from .cubic_field import CubicField, FieldElement
from .errors import InternalInconsistency, PrecisionExhausted
from .search import geometric_slabs, region_points

PRECISION_LADDER = (128, 256, 512)
MAX_SLABS = 600


@dataclass(frozen=True)
class UnitCertificate:
    lower_bound: float
    slabs: tuple[tuple[float, float, int], ...]  # (lo, hi, lattice points examined)

    @property
    def searched_up_to(self) -> float:
        return self.slabs[-1][1] if self.slabs else self.lower_bound


@dataclass(frozen=True)
class UnitGroupL:
    fundamental: FieldElement
    regulator: float
    torsion: tuple[int, int] = (-1, 1)
    certificate: UnitCertificate = field(default=None, compare=False)


def unit_lower_bound(F: CubicField) -> mpmath.mpf:
    """L with eps^3 > (|disc| - 27)/4 for the fundamental unit eps > 1."""
    return mpmath.cbrt(mpmath.mpf(abs(F.discriminant) - 27) / 4)


def real_value(F: CubicField, x: FieldElement, prec: int = 128):
    return F.embed(x, prec)[0]


def _less(F, x, y) -> bool:
    """Exact order of two distinct elements by real embedding, with a precision ladder."""
    if x == y:
        return False
    for prec in PRECISION_LADDER:
        rx, ry = real_value(F, x, prec), real_value(F, y, prec)
        if abs(rx - ry) > mpmath.mpf(2) ** (16 - prec) * max(abs(rx), abs(ry), 1):
            return rx < ry
    raise PrecisionExhausted("cannot order two units by their real embeddings")


def units_in_range(F: CubicField, lo, hi) -> tuple[list[FieldElement], list[tuple[float, float, int]]]:
    """Every unit u of O_L with lo <= u <= hi (real embedding), lo >= 1."""
    found, log = [], []
    for s_lo, s_hi in geometric_slabs(lo, hi):
        pts = region_points(F, F.unit_ideal(), s_lo, s_hi, 1 / mpmath.sqrt(s_lo))
        log.append((float(s_lo), float(s_hi), len(pts)))
        for x in pts:
            if abs(F.norm(x)) == 1 and x != F.one:
                found.append(x)
    return found, log


@functools.lru_cache(maxsize=256)
def fundamental_unit(F: CubicField) -> UnitGroupL:
    L = unit_lower_bound(F)
    slabs = []
    t = mpmath.mpf(L)
    for _ in range(MAX_SLABS):
        found, log = units_in_range(F, t, 2 * t)
        slabs.extend(log)
        if found:
            eps = found[0]
            for u in found[1:]:
                if _less(F, u, eps):
                    eps = u
            if F.norm(eps) != 1:
                raise InternalInconsistency("unit of a complex cubic field with norm -1")
            r = real_value(F, eps, 128)
            if r <= L:
                raise InternalInconsistency("unit below the classical lower bound")
            cert = UnitCertificate(lower_bound=float(L), slabs=tuple(slabs))
            return UnitGroupL(fundamental=eps, regulator=float(mpmath.log(r)), certificate=cert)
        t = 2 * t
    raise PrecisionExhausted(f"no unit found below 2^{MAX_SLABS} * L")


def verify_certificate(F: CubicField, U: UnitGroupL) -> bool:
    """Re-run the exhaustive sweep from L to eps and confirm eps is the only unit found."""
    eps_r = real_value(F, U.fundamental)
    found, _ = units_in_range(F, unit_lower_bound(F), eps_r * (1 + mpmath.mpf(2) ** -40))
    return found == [U.fundamental] or (len(set(found)) == 1 and found[0] == U.fundamental)

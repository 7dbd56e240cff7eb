"""Unit and principal-factor invariants of N = L(zeta_3) and their coarse types.

For a pure cubic field L with Galois closure N over K = Q(zeta_3):

* U is the F_3-dimension of the norm-residue group of units; it vanishes
  exactly when zeta_3 is the relative norm of a unit of N.
* A is the F_3-dimension of the principal ideals generated by products of the
  totally ramified primes of L (modulo rational ideals).
* P = U + 1 and R = U + 1 - A follow from the Herbrand quotient.

The unit group of N is approached from the full-rank subgroup
<zeta_6, eps, sigma(eps)> by saturating at 3.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .class_group import principal_test
from .cubic_field import CubicField, FieldElement, PrimeIdeal, build_field
from .cubic_field import _rank_mod
from .coarse_types import (  # noqa: F401  (re-exported)
    DIHEDRAL_ANALOGUE,
    SPLIT_PAIRS,
    CoarseType,
    CohomologyInvariants,
    type_label,
    type_lattice,
    types_for,
)
from .errors import InadmissiblePair, InternalInconsistency, InvalidPrime
from .radicand import Radicand
from .sextic import MU6, SexticElement, SexticField
from .units import UnitGroupL, fundamental_unit

MAX_SATURATION_STEPS = 32


# ------------------------------------------------------------------ sextic ops
def sextic_mul(x: SexticElement, y: SexticElement, S: SexticField) -> SexticElement:
    return S.mul(x, y)


def sextic_sigma(x: SexticElement, S: SexticField, k: int = 1) -> SexticElement:
    return S.sigma(x, k)


def relative_norm(x: SexticElement, S: SexticField):
    return S.relative_norm(x)


# ------------------------------------------------------- principal factors (A)
def ambiguous_basis(F: CubicField) -> list[PrimeIdeal]:
    """The totally ramified primes of L, ordered by the rational prime below."""
    out = []
    for ell in sorted(F.radicand.factors() | {3: 1}):
        out.extend(P for P in F.factor_prime(ell) if P.e == 3)
    return out


@dataclass(frozen=True)
class PrincipalFactors:
    primes: tuple[PrimeIdeal, ...]
    # exponent vectors (over F_3, first nonzero entry 1) of principal products
    principal: tuple[tuple[tuple[int, ...], FieldElement], ...]
    dimension: int
    tested: int


def _projective_vectors(t: int):
    for v in itertools.product(range(3), repeat=t):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            yield v


def principal_factors(F: CubicField) -> PrincipalFactors:
    primes = ambiguous_basis(F)
    found, tested = [], 0
    for v in _projective_vectors(len(primes)):
        I = F.unit_ideal()
        for P, e in zip(primes, v):
            if e:
                I = F.ideal_mul(I, F.prime_power(P, e))
        tested += 1
        g = principal_test(I, F)
        if g is not None:
            found.append((v, g))
    dim = _rank_mod([list(v) for v, _ in found], 3) if found else 0
    # principal vectors form a subspace: (3^dim - 1)/2 points up to scalars
    if len(found) != (3**dim - 1) // 2:
        raise InternalInconsistency("principal products do not form a subspace")
    return PrincipalFactors(tuple(primes), tuple(found), dim, tested)


@functools.lru_cache(maxsize=256)
def absolute_dpf_dimension(F: CubicField) -> int:
    return principal_factors(F).dimension


# ----------------------------------------------------------- unit saturation (U)
@dataclass(frozen=True)
class CubeAddition:
    root: SexticElement
    exponents: tuple[int, int, int]  # (a, b, c) for zeta_6^a g1^b g2^c
    representative: SexticElement
    generators_before: tuple[SexticElement, SexticElement, SexticElement]


@dataclass(frozen=True)
class SaturatedUnits:
    generators: tuple[SexticElement, SexticElement, SexticElement]  # (zeta_6, g1, g2)
    additions: tuple[CubeAddition, ...] = ()
    classes_tested: int = field(default=0, compare=False)


def _class_representatives():
    """(a, b, c) up to F_3 scalars; zeta_6^3 = (-1)^3 so a only matters mod 3."""
    return list(_projective_vectors(3))


def _word(S: SexticField, gens, exps) -> SexticElement:
    y = S.one
    for g, e in zip(gens, exps):
        if e:
            y = S.mul(y, S.pow(g, e))
    return y


def saturate(S: SexticField, gens) -> SaturatedUnits:
    """Enlarge <gens> (gens[0] = zeta_6) until no nontrivial class mod cubes is a cube."""
    gens = tuple(gens)
    additions, tested = [], 0
    for _ in range(MAX_SATURATION_STEPS):
        hit = None
        for exps in _class_representatives():
            y = _word(S, gens, exps)
            tested += 1
            z = S.cube_root(y)
            if z is not None:
                hit = (z, exps, y)
                break
        if hit is None:
            return SaturatedUnits(gens, tuple(additions), tested)
        z, exps, y = hit
        additions.append(CubeAddition(z, exps, y, gens))
        gens = _enlarge(S, gens, z, exps)
    raise InternalInconsistency("cube saturation did not stabilize")


def _enlarge(S: SexticField, gens, z, exps):
    a, b, c = exps
    if b == 0 and c == 0:
        raise InternalInconsistency("a root of unity of order 9 or 18 inside N")
    pivot = 1 if b else 2
    if exps[pivot] == 2:
        doubled = [2 * e for e in exps]
        carry = [e // 3 for e in doubled]
        z = S.mul(S.pow(z, 2), S.unit_inverse(_word(S, gens, carry)))
    new = list(gens)
    new[pivot] = z
    return tuple(new)


def cube_saturate_units(F: CubicField, eps: UnitGroupL | None = None) -> SaturatedUnits:
    S = SexticField(F)
    eps = eps or fundamental_unit(F)
    u = S.from_cubic(eps.fundamental)
    return saturate(S, (S.zeta6, u, S.sigma(u)))


def zeta_norm_invariant(F: CubicField, units: SaturatedUnits) -> int:
    """0 if zeta_3 is the relative norm of a unit, otherwise 1."""
    S = SexticField(F)
    exps = []
    for g in units.generators:
        nx, ny = S.relative_norm(g)
        key = (int(nx), int(ny))
        if nx.denominator != 1 or ny.denominator != 1 or key not in MU6:
            raise InternalInconsistency("relative norm of a unit outside mu_6")
        exps.append(MU6[key])
    # the norms generate zeta_6^gcd(exps, 6); it contains zeta_3 iff 3 does not divide gcd
    g = 6
    for e in exps:
        g = _gcd(g, e)
    return 0 if g % 3 else 1


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


# ------------------------------------------------------------------- classify
@dataclass(frozen=True)
class Classification:
    invariants: CohomologyInvariants
    coarse: CoarseType
    factors: PrincipalFactors
    units: SaturatedUnits


@functools.lru_cache(maxsize=256)
def classify_field(F: CubicField) -> Classification:
    factors = principal_factors(F)
    units = cube_saturate_units(F)
    U = zeta_norm_invariant(F, units)
    A = factors.dimension
    if A < 1 or U + 1 - A < 0:
        raise InadmissiblePair(f"d={F.d}: (U, A) = ({U}, {A})")
    inv = CohomologyInvariants.from_units_and_factors(U, A)
    matches = types_for(3, U, A)
    if len(matches) != 1:
        raise InadmissiblePair(f"d={F.d}: (U, A) = ({U}, {A}) not in the p=3 lattice")
    return Classification(inv, matches[0], factors, units)


def classify(r: Radicand) -> tuple[CohomologyInvariants, CoarseType]:
    if r.p != 3:
        raise InvalidPrime(f"full classification needs p = 3, got {r.p}")
    c = classify_field(build_field(r))
    return c.invariants, c.coarse

"""Class group of a pure cubic field: principality testing and relation lattices.

The factor base consists of all prime ideals above rational primes up to the
Minkowski bound, so it generates the class group.  Relations are genuine
(factorizations of ell*O_L and of principal ideals (x) with smooth norm), so
the relation lattice Lambda sits inside the true one and Z^n/Lambda maps onto
Cl(L).  The map is certified injective by showing that no element of prime
order in Z^n/Lambda is principal; a principal one becomes a new relation.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from .cubic_field import CubicField, FieldElement, FracIdeal, PrimeIdeal
from .cyclotomic import primes_below
from .errors import RelationSearchIncomplete
from .lattice import ColumnHNF, reduce_mod_hnf
from .search import geometric_slabs, region_points
from .units import fundamental_unit

EULER_PRODUCT_BOUND = 10**4
MAX_RELATION_ROUNDS = 40


@dataclass(frozen=True)
class ClassGroupResult:
    h: int
    three_rank: int
    invariants: tuple[int, ...]
    # (representative ideal, order) for each cyclic factor of the invariants
    generators: tuple[tuple[FracIdeal, int], ...]
    minkowski_bound: int
    factor_base: tuple[PrimeIdeal, ...] = ()
    principal_tests: int = 0


def minkowski_bound(F: CubicField) -> int:
    """ceil((2/9)(4/pi) sqrt|disc|) for a complex cubic field."""
    with mpmath.workprec(80):
        return int(mpmath.ceil(mpmath.mpf(8) / (9 * mpmath.pi) * mpmath.sqrt(abs(F.discriminant))))


def principal_test(I: FracIdeal, F: CubicField) -> FieldElement | None:
    """A generator of the integral ideal I, or None if I is not principal.

    If I = (g), some associate g*eps^k has real embedding within a factor
    e^(R/2) of N(I)^(1/3); that range is swept exhaustively slab by slab.
    """
    if I.denom != 1:
        raise ValueError("principal_test expects an integral ideal")
    n = int(I.norm)
    if n == 1:
        return F.one
    R = mpmath.mpf(fundamental_unit(F).regulator) + mpmath.mpf(2) ** -20
    with mpmath.workprec(128):
        c = mpmath.cbrt(n)
        lo, hi = c * mpmath.exp(-R / 2), c * mpmath.exp(R / 2)
        for s_lo, s_hi in geometric_slabs(lo, hi):
            smax = mpmath.sqrt(n / s_lo)
            for x in region_points(F, I, s_lo, s_hi, smax):
                if abs(F.norm(x)) == n:
                    return x
    return None


def analytic_hr(F: CubicField, bound: int = EULER_PRODUCT_BOUND) -> float:
    """Truncated Euler product estimate of h*R (used only to size searches)."""
    d = F.d
    logsum = 0.0
    for ell in primes_below(bound):
        ell = int(ell)
        if (3 * d) % ell == 0:
            local = 1.0
            for P in F.factor_prime(ell):
                local *= 1 - ell ** (-P.f)
            factor = (1 - 1 / ell) / local
        elif ell % 3 == 2:
            factor = 1 / (1 - ell**-2)
        elif pow(d, (ell - 1) // 3, ell) == 1:
            factor = (1 - 1 / ell) ** -2
        else:
            factor = (1 - 1 / ell) / (1 - ell**-3)
        logsum += math.log(factor)
    return math.sqrt(abs(F.discriminant)) / (2 * math.pi) * math.exp(logsum)


class _Relations:
    def __init__(self, F: CubicField, fb: list[PrimeIdeal]):
        self.F = F
        self.fb = fb
        self.index = {P: i for i, P in enumerate(fb)}
        self.by_ell: dict[int, list[PrimeIdeal]] = {}
        for P in fb:
            self.by_ell.setdefault(P.ell, []).append(P)
        self.lattice = ColumnHNF(len(fb))
        self.modulus_set = False

    def add(self, v) -> bool:
        changed = self.lattice.add(v)
        if self.lattice.full_rank() and not self.modulus_set:
            self.lattice.set_modulus(self.lattice.det())
            self.modulus_set = True
        return changed

    def vector_of(self, x: FieldElement) -> list[int] | None:
        """Exponent vector of (x) over the factor base, or None if not smooth."""
        F = self.F
        n = abs(F.norm(x))
        if n == 0:
            return None
        n = int(n)
        v = [0] * len(self.fb)
        for ell, primes in self.by_ell.items():
            if n % ell:
                continue
            k = 0
            while n % ell == 0:
                n //= ell
                k += 1
            rest = k
            for P in primes[:-1]:
                e = F.valuation(P, x)
                v[self.index[P]] = e
                rest -= e * P.f
            last = primes[-1]
            if rest % last.f:
                raise ArithmeticError("inconsistent valuations")
            v[self.index[last]] = rest // last.f
        return v if n == 1 else None


def _factor_base(F: CubicField, bound: int, order=None) -> list[PrimeIdeal]:
    fb = []
    for ell in primes_below(bound + 1):
        fb.extend(F.factor_prime(int(ell)))
    fb.sort(key=lambda P: (P.norm, P.ell, P.ideal.hnf))
    if order is not None:
        fb = [fb[i] for i in order(len(fb))]
    return fb


def _element_relations(rel: _Relations, I: FracIdeal, weight, spread: int) -> None:
    """Add relations from elements of I of norm at most ~ 2*weight*N(I)."""
    F = rel.F
    n = int(I.norm)
    with mpmath.workprec(128):
        c = mpmath.cbrt(n * weight)
        for k in range(-spread, spread):
            s_lo = c * mpmath.mpf(2) ** k
            smax = mpmath.sqrt(weight * n / s_lo)
            for x in region_points(F, I, s_lo, 2 * s_lo, smax):
                v = rel.vector_of(x)
                if v is not None:
                    rel.add(v)


def _quotient_structure(H, n):
    """SNF of Z^n / Lambda restricted to the coordinates with H_ii > 1.

    Returns (K, invariants, Umat) where group coordinates of a K-supported
    vector z are Umat * z taken modulo the invariants.
    """
    K = [i for i in range(n) if H[i][i] > 1]
    cols = {j: [H[i][j] for i in range(n)] for j in range(n)}
    for j in range(n - 1, -1, -1):
        if H[j][j] != 1:
            continue
        cj = cols[j]
        for k in K:
            c = cols[k]
            if c[j]:
                q = c[j]
                cols[k] = [x - q * y for x, y in zip(c, cj)]
    if not K:
        return K, (), None
    m = Matrix([[cols[k][i] for k in K] for i in K])
    S, U, _ = smith_normal_decomp(m)
    inv = tuple(int(abs(S[i, i])) for i in range(len(K)))
    return K, inv, U


@functools.lru_cache(maxsize=256)
def class_group(F: CubicField, order=None) -> ClassGroupResult:
    """Class group of L (see the module docstring for the certification).

    ``order`` optionally permutes the factor base (a callable n -> list of
    indices); the result must not depend on it.
    """
    M = minkowski_bound(F)
    fb = _factor_base(F, M, order)
    n = len(fb)
    if n == 0:
        return ClassGroupResult(1, 0, (), (), M, (), 0)
    rel = _Relations(F, fb)
    for ell, primes in rel.by_ell.items():
        v = [0] * n
        for P in primes:
            v[rel.index[P]] = P.e
        rel.add(v)
    R = fundamental_unit(F).regulator
    est = analytic_hr(F) / R
    weight = max(1, int(math.sqrt(abs(F.discriminant))) // 6 + 1)
    _element_relations(rel, F.unit_ideal(), weight, 3)
    for P in fb:
        if rel.lattice.full_rank():
            break
        _element_relations(rel, P.ideal, weight, 2)
    rounds = 0
    pairs = itertools.combinations(range(min(n, 12)), 2)
    while not rel.lattice.full_rank() or rel.lattice.det() > 1.5 * est:
        rounds += 1
        if rounds > MAX_RELATION_ROUNDS:
            if rel.lattice.full_rank():
                break
            raise RelationSearchIncomplete(f"relation lattice rank {rel.lattice.rank()} < {n}")
        pair = next(pairs, None)
        if pair is None:
            weight *= 2
            pairs = itertools.combinations(range(min(n, 12)), 2)
            continue
        I = F.ideal_mul(fb[pair[0]].ideal, fb[pair[1]].ideal)
        _element_relations(rel, I, weight, 2)

    tests = 0
    while True:
        H = rel.lattice.matrix()
        K, inv, U = _quotient_structure(H, n)
        h = math.prod(inv) if inv else 1
        new_relation = None
        for q in sorted(_prime_divisors(h)):
            for y in _socle_vectors(K, inv, U, q, n, H):
                tests += 1
                I = _ideal_of(F, fb, y)
                if principal_test(I, F) is not None:
                    new_relation = y
                    break
            if new_relation:
                break
        if new_relation is None:
            break
        rel.add(new_relation)

    gens = []
    if inv:
        Uinv = U.inv()
        for i, s in enumerate(inv):
            if s == 1:
                continue
            z = [0] * n
            for a, k in enumerate(K):
                z[k] = int(Uinv[a, i])
            y = reduce_mod_hnf(H, z)
            gens.append((_ideal_of(F, fb, y), s))
    nontrivial = tuple(s for s in inv if s > 1)
    return ClassGroupResult(
        h=h,
        three_rank=sum(1 for s in nontrivial if s % 3 == 0),
        invariants=tuple(sorted(nontrivial)),
        generators=tuple(gens),
        minkowski_bound=M,
        factor_base=tuple(fb),
        principal_tests=tests,
    )


def _prime_divisors(h: int) -> set[int]:
    out, q = set(), 2
    while q * q <= h:
        while h % q == 0:
            out.add(q)
            h //= q
        q += 1
    if h > 1:
        out.add(h)
    return out


def _socle_vectors(K, inv, U, q, n, H):
    """Exponent vectors (over the factor base) of the elements of order q, up to scalars."""
    idx = [i for i, s in enumerate(inv) if s % q == 0]
    Uinv = U.inv()
    for coeffs in itertools.product(range(q), repeat=len(idx)):
        nz = [c for c in coeffs if c]
        if not nz or nz[0] != 1:
            continue
        g = [0] * len(K)
        for c, i in zip(coeffs, idx):
            g[i] = c * (inv[i] // q)
        z = [0] * n
        for a, k in enumerate(K):
            z[k] = int(sum(Uinv[a, b] * g[b] for b in range(len(K))))
        yield reduce_mod_hnf(H, z)


def _ideal_of(F: CubicField, fb, y) -> FracIdeal:
    I = F.unit_ideal()
    for P, e in zip(fb, y):
        if e:
            I = F.ideal_mul(I, F.prime_power(P, e) if e < 8 else F.ideal_pow(P.ideal, e))
    return I


def class_number(F: CubicField) -> int:
    return class_group(F).h

"""Radicands of pure fields Q(D^(1/p)).

A radicand is stored p-th power free and reduced to the smallest of its
power-conjugates d^k (k = 1..p-1, stripped of p-th powers), all of which
generate the same field.  For p = 3 the standard form d = a*b^2 with a, b
squarefree and coprime is recorded together with the Dedekind species.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


from .errors import DegenerateRadicand, FactorizationIncomplete, InvalidPrime

SUPPORTED_PRIMES = (3, 5, 7)
TRIAL_DIVISION_BOUND = 10**6


class Species(enum.Enum):
    """Dedekind's dichotomy for pure cubic radicands.

    TypeI: d^2 = 1 (mod 9), i.e. d = +-1 (mod 9).  TypeII: everything else.
    """

    TypeI = "I"
    TypeII = "II"


def factorize(n: int, rho_attempts: int = 20) -> dict[int, int]:
    """Factor ``n >= 1`` by trial division up to 10^6, then Pollard rho.

    Raises FactorizationIncomplete if a composite cofactor survives
    ``rho_attempts`` rho runs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n and q <= TRIAL_DIVISION_BOUND:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    stack = [n] if n > 1 else []
    if stack:
        # only large cofactors need these; keep the import off the fast path
        from sympy import isprime
        from sympy.ntheory import pollard_rho
    while stack:
        m = stack.pop()
        if isprime(m):
            out[m] = out.get(m, 0) + 1
            continue
        for seed in range(2, 2 + rho_attempts):
            f = pollard_rho(m, s=seed, retries=0)
            if f and 1 < f < m:
                stack.extend((f, m // f))
                break
        else:
            raise FactorizationIncomplete(f"could not split composite cofactor {m}")
    return dict(sorted(out.items()))


def _stripped(factors: dict[int, int], p: int, k: int = 1) -> int:
    return math.prod(q ** ((k * e) % p) for q, e in factors.items())


@dataclass(frozen=True)
class Radicand:
    p: int
    d: int
    a: int | None = None
    b: int | None = None
    species: Species | None = None
    d_raw: int = field(default=0, compare=False)
    # p-th power free form of d_raw before choosing the canonical conjugate
    stripped: int = field(default=0, compare=False)

    @property
    def is_canonical(self) -> bool:
        return self.stripped == self.d

    def factors(self) -> dict[int, int]:
        return factorize(self.d)


def _cubic_parts(d: int) -> tuple[int, int, Species]:
    fac = factorize(d)
    a = math.prod(q for q, e in fac.items() if e == 1)
    b = math.prod(q for q, e in fac.items() if e == 2)
    species = Species.TypeI if (d * d) % 9 == 1 else Species.TypeII
    return a, b, species


def normalize(d_raw: int, p: int) -> Radicand:
    """Strip p-th powers from ``d_raw`` and pick the canonical conjugate.

    >>> normalize(250, 3).d
    2
    >>> normalize(18, 3).d, normalize(18, 3).stripped
    (12, 18)
    """
    if p not in SUPPORTED_PRIMES:
        raise InvalidPrime(f"p must be one of {SUPPORTED_PRIMES}, got {p}")
    if d_raw < 2:
        raise ValueError("radicand must be >= 2")
    fac = factorize(d_raw)
    stripped = _stripped(fac, p)
    if stripped == 1:
        raise DegenerateRadicand(f"{d_raw} is a perfect {p}-th power")
    d = min(_stripped(fac, p, k) for k in range(1, p))
    if p != 3:
        return Radicand(p=p, d=d, d_raw=d_raw, stripped=stripped)
    a, b, species = _cubic_parts(d)
    return Radicand(p=3, d=d, a=a, b=b, species=species, d_raw=d_raw, stripped=stripped)


def cubic_form(d: int) -> Radicand:
    """Radicand for a cube-free ``d`` exactly as given, without canonical reduction."""
    r = normalize(d, 3)
    if r.stripped != d:
        raise ValueError(f"{d} is not cube free")
    a, b, species = _cubic_parts(d)
    return Radicand(p=3, d=d, a=a, b=b, species=species, d_raw=d, stripped=d)


def conjugate_radicand(r: Radicand) -> int:
    """The co-radicand a^2*b of d = a*b^2; Q(cbrt(ab^2)) = Q(cbrt(a^2 b))."""
    if r.p != 3:
        raise InvalidPrime("conjugate radicands are defined here for p = 3 only")
    return r.a * r.a * r.b

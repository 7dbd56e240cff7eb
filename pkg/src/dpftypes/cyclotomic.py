"""Decomposition of rational primes in Q(zeta_p) and the conductor of N/K (p=3)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidPrime
from .radicand import SUPPORTED_PRIMES, Radicand, Species, factorize

# Reference list: prime radicands 2 <= D < 200 with D = 2, 4 (mod 7).
REFERENCE_TWO_SPLIT_PRIMES = (2, 11, 23, 37, 53, 67, 79, 107, 109, 137, 149, 151, 163, 179, 191, 193)


@dataclass(frozen=True)
class SplittingReport:
    ell: int
    p: int
    e: int
    f: int
    g: int
    ishida: bool
    kobayashi: bool
    septic_two_split: bool

    def flags(self) -> list[str]:
        names = ("ishida", "kobayashi", "septic_two_split")
        return [n for n in names if getattr(self, n)]


@dataclass(frozen=True)
class Conductor:
    value: int
    prime_divisors: tuple[tuple[int, SplittingReport], ...]


def mult_order(ell: int, p: int) -> int:
    """Multiplicative order of ell modulo p."""
    if ell % p == 0:
        raise ValueError("ell must be coprime to p")
    x, f = ell % p, 1
    while x != 1:
        x = x * ell % p
        f += 1
    return f


def split_in_cyclotomic(ell: int, p: int) -> SplittingReport:
    if p not in SUPPORTED_PRIMES:
        raise InvalidPrime(p)
    if ell == p:
        e, f = p - 1, 1
    else:
        e, f = 1, mult_order(ell, p)
    r = ell % p
    return SplittingReport(
        ell=ell,
        p=p,
        e=e,
        f=f,
        g=(p - 1) // (e * f),
        ishida=r == 1,
        kobayashi=p == 5 and r == 4,
        septic_two_split=p == 7 and r in (2, 4),
    )


def conductor_p3(r: Radicand) -> Conductor:
    """Conductor f of N/K for p = 3: ab for species I, 3ab for species II.

    Equivalently disc(L) = -3 f^2.
    """
    if r.p != 3:
        raise InvalidPrime("the conductor formula is implemented for p = 3 only")
    value = r.a * r.b * (1 if r.species is Species.TypeI else 3)
    primes = tuple((q, split_in_cyclotomic(q, 3)) for q in factorize(value))
    return Conductor(value=value, prime_divisors=primes)


def primes_below(limit: int) -> np.ndarray:
    """All primes < limit (sieve of Eratosthenes)."""
    if limit <= 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve)


def two_split_primes(limit: int) -> list[int]:
    """Primes 2 <= ell < limit with ell = 2 or 4 (mod 7), ascending.

    Each of them splits into two primes of degree three in Q(zeta_7).
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    ps = primes_below(limit)
    return [int(q) for q in ps[np.isin(ps % 7, (2, 4))]]

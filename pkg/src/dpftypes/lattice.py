"""Exact integer lattice helpers: column Hermite normal form, LLL, Fincke-Pohst.

Column convention throughout: a lattice in Z^n is spanned by the columns of an
n x n upper-triangular matrix H with positive diagonal; entry H[i][j] (i < j)
is reduced into [0, H[i][i]).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


class ColumnHNF:
    """Incrementally maintained column HNF of a sublattice of Z^n.

    ``modulus`` may be any positive integer D with D*Z^n inside the lattice;
    it is used to keep entries small and is inserted as D*e_i generators.
    """

    def __init__(self, n: int, modulus: int | None = None):
        self.n = n
        self.piv: list[list[int] | None] = [None] * n
        self.modulus = None
        if modulus is not None:
            self.set_modulus(modulus)

    def set_modulus(self, D: int) -> None:
        D = abs(D)
        self.modulus = None
        for i in range(self.n):
            e = [0] * self.n
            e[i] = D
            self.add(e)
        self.modulus = D
        self._reduce_pivots()

    def _reduce_pivots(self) -> None:
        D = self.modulus
        if not D:
            return
        for i, P in enumerate(self.piv):
            if P is not None:
                for k in range(i):
                    P[k] %= D

    def add(self, v: Iterable[int]) -> bool:
        """Insert a generator; return True if the lattice grew."""
        v = list(v)
        D = self.modulus
        changed = False
        for i in range(self.n - 1, -1, -1):
            if D:
                v = [x % D for x in v]
            vi = v[i]
            if vi == 0:
                continue
            P = self.piv[i]
            if P is None:
                if vi < 0:
                    v = [-x for x in v]
                self.piv[i] = v
                return True
            pi = P[i]
            if vi % pi == 0:
                q = vi // pi
                v = [x - q * y for x, y in zip(v, P)]
                continue
            g, s, t = xgcd(pi, vi)
            newP = [s * x + t * y for x, y in zip(P, v)]
            a, b = vi // g, pi // g
            v = [a * x - b * y for x, y in zip(P, v)]
            if D:
                newP = [x % D if k < i else x for k, x in enumerate(newP)]
            self.piv[i] = newP
            changed = True
        return changed

    def rank(self) -> int:
        return sum(P is not None for P in self.piv)

    def full_rank(self) -> bool:
        return all(P is not None for P in self.piv)

    def det(self) -> int:
        if not self.full_rank():
            raise ValueError("lattice is not of full rank")
        return math.prod(P[i] for i, P in enumerate(self.piv))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Reduced HNF as a tuple of rows (requires full rank)."""
        if not self.full_rank():
            raise ValueError("lattice is not of full rank")
        cols = [list(P) for P in self.piv]
        n = self.n
        for j in range(n):
            for i in range(j - 1, -1, -1):
                q = cols[j][i] // cols[i][i]
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[i])]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def hnf_from_columns(cols: Iterable[Sequence[int]], n: int, modulus: int | None = None):
    L = ColumnHNF(n, modulus)
    for c in cols:
        L.add(c)
    return L.matrix()


def reduce_mod_hnf(H: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    """Canonical representative of v modulo the lattice of H: 0 <= v_i < H[i][i]."""
    v = list(v)
    n = len(v)
    for j in range(n - 1, -1, -1):
        q = v[j] // H[j][j]
        if q:
            for i in range(j + 1):
                v[i] -= q * H[i][j]
    return v


def solve_upper(H: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """Integer y with H y = v, or None if v is not in the lattice."""
    n = len(v)
    v = list(v)
    y = [0] * n
    for j in range(n - 1, -1, -1):
        q, r = divmod(v[j], H[j][j])
        if r:
            return None
        y[j] = q
        for i in range(j + 1):
            v[i] -= q * H[i][j]
    return y


def lll_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Unimodular T (list of rows) such that T * rows is LLL reduced."""
    n = len(rows)
    M = DomainMatrix([[ZZ(int(x)) for x in r] for r in rows], (n, len(rows[0])), ZZ)
    _, T = M.lll_transform()
    return [[int(x) for x in r] for r in T.to_list()]


def fincke_pohst(gram: np.ndarray, bound: float) -> Iterator[tuple[int, ...]]:
    """All integer vectors x (including 0) with x^T gram x <= bound.

    ``gram`` must be positive definite; a Cholesky-type decomposition is used
    and the enumeration is exhaustive up to floating-point rounding of gram.
    """
    n = gram.shape[0]
    q = np.array(gram, dtype=float)
    # q[i][i] <- diagonal of the Cholesky form, q[i][j] (j > i) <- mu coefficients
    for i in range(n):
        for j in range(i + 1, n):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k, l] -= q[k, i] * q[i, l]
    x = [0] * n

    def rec(i: int, rem: float) -> Iterator[tuple[int, ...]]:
        c = -sum(q[i, j] * x[j] for j in range(i + 1, n))
        r = math.sqrt(max(rem, 0.0) / q[i, i])
        for xi in range(math.ceil(c - r - 1e-12), math.floor(c + r + 1e-12) + 1):
            x[i] = xi
            t = rem - q[i, i] * (xi - c) ** 2
            if t < -1e-9 * (1 + bound):
                continue
            if i == 0:
                yield tuple(x)
            else:
                yield from rec(i - 1, t)
        x[i] = 0

    yield from rec(n - 1, bound)

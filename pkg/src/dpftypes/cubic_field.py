"""Exact arithmetic in the pure cubic field L = Q(theta), theta^3 = d = a*b^2.

Elements are integer coordinate vectors over an integral basis (omega_1,
omega_2, omega_3) with a positive common denominator.  The basis is given in
terms of the order Z[theta, phi], phi = theta^2/b, whose multiplication is

    theta^2 = b*phi,   theta*phi = a*b,   phi^2 = a*theta.

Species II: {1, theta, phi}.  Species I: {1, theta, (c0 + c1*theta + phi)/3}
where (c0, c1) is found by search and certified by an integral characteristic
polynomial.  Ideals are column HNF matrices over the integral basis.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from .errors import InvalidPrime
from .lattice import ColumnHNF, reduce_mod_hnf, solve_upper
from .radicand import Radicand, Species, normalize


@dataclass(frozen=True)
class FieldElement:
    coords: tuple[int, int, int]
    denom: int = 1

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        dn = int(self.denom)
        if dn == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if dn < 0:
            c, dn = tuple(-x for x in c), -dn
        g = math.gcd(dn, *c)
        if g > 1:
            c, dn = tuple(x // g for x in c), dn // g
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "denom", dn)

    @property
    def is_integral(self) -> bool:
        return self.denom == 1

    def __neg__(self):
        return FieldElement(tuple(-x for x in self.coords), self.denom)


@dataclass(frozen=True)
class FracIdeal:
    hnf: tuple[tuple[int, ...], ...]
    denom: int = 1

    @property
    def norm(self) -> Fraction:
        return Fraction(math.prod(self.hnf[i][i] for i in range(3)), self.denom**3)

    @property
    def min_integer(self) -> int:
        """Smallest positive integer in an integral ideal."""
        return self.hnf[0][0]


@dataclass(frozen=True)
class PrimeIdeal:
    ell: int
    e: int
    f: int
    ideal: FracIdeal
    uniformizer_hint: FieldElement | None = None

    @property
    def norm(self) -> int:
        return self.ell**self.f


def _w_mul(u, v, a: int, b: int):
    return (
        u[0] * v[0] + a * b * (u[1] * v[2] + u[2] * v[1]),
        u[0] * v[1] + u[1] * v[0] + a * u[2] * v[2],
        u[0] * v[2] + u[2] * v[0] + b * u[1] * v[1],
    )


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _charpoly3(m):
    """Coefficients (c2, c1, c0) of x^3 + c2 x^2 + c1 x + c0 for a 3x3 matrix."""
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    return -tr, minors, -_det3(m)


def _w_mult_matrix(w, a, b):
    cols = [_w_mul(w, e, a, b) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    return [[cols[j][i] for j in range(3)] for i in range(3)]


class CubicField:
    """The pure cubic field Q(cbrt(d)) with a fixed integral basis.

    Instances are immutable and hashable by their radicand form (d, a, b).
    """

    def __init__(self, radicand: Radicand):
        if radicand.p != 3:
            raise InvalidPrime("cubic field arithmetic needs p = 3")
        self.radicand = radicand
        self.d, self.a, self.b = radicand.d, radicand.a, radicand.b
        a, b = self.a, self.b
        if radicand.species is Species.TypeII:
            self.basis_denominator = 1
            self.basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        else:
            self.basis_denominator = 3
            self.basis = ((3, 0, 0), (0, 3, 0), self._species_one_row())
        den = self.basis_denominator
        # w-coordinates of x = (omega-coords) . B / den ; inverse via Fractions
        B = [[Fraction(x, den) for x in row] for row in self.basis]
        self._B = B
        self._Binv = _inverse3(B)
        table = {}
        for i, j in itertools.product(range(3), repeat=2):
            prod = _w_mul(B[i], B[j], a, b)
            c = self._w_to_omega(prod)
            if any(x.denominator != 1 for x in c):
                raise ArithmeticError("integral basis is not closed under multiplication")
            table[i, j] = tuple(int(x) for x in c)
        self._table = table
        gram = [[3 * _w_mul(B[i], B[j], a, b)[0] for j in range(3)] for i in range(3)]
        disc = _det3(gram)
        expected = -(3 if radicand.species is Species.TypeI else 27) * (a * b) ** 2
        if disc != expected:
            raise ArithmeticError(f"discriminant {disc} != {expected}")
        self.discriminant = int(disc)

    def _species_one_row(self):
        a, b = self.a, self.b
        for c0, c1 in itertools.product(range(3), repeat=2):
            w = (Fraction(c0, 3), Fraction(c1, 3), Fraction(1, 3))
            if all(c.denominator == 1 for c in _charpoly3(_w_mult_matrix(w, a, b))):
                return (c0, c1, 1)
        raise ArithmeticError(f"no integral element (c0 + c1 theta + phi)/3 for d={self.d}")

    def __repr__(self):
        return f"CubicField(d={self.d}, a={self.a}, b={self.b}, disc={self.discriminant})"

    def __eq__(self, other):
        return isinstance(other, CubicField) and (self.d, self.a, self.b) == (other.d, other.a, other.b)

    def __hash__(self):
        return hash(("CubicField", self.d, self.a, self.b))

    # ------------------------------------------------------------ coordinates
    def _w_to_omega(self, w):
        return tuple(sum(w[k] * self._Binv[k][i] for k in range(3)) for i in range(3))

    def to_w(self, x: FieldElement) -> tuple[Fraction, Fraction, Fraction]:
        """Coordinates of x over (1, theta, phi)."""
        return tuple(
            sum(Fraction(x.coords[i]) * self._B[i][k] for i in range(3)) / x.denom for k in range(3)
        )

    def from_w(self, w) -> FieldElement:
        c = self._w_to_omega([Fraction(t) for t in w])
        den = math.lcm(*(t.denominator for t in c))
        return FieldElement(tuple(int(t * den) for t in c), den)

    def element(self, c0=0, c1=0, c2=0) -> FieldElement:
        """The element c0 + c1*theta + c2*theta^2."""
        return self.from_w((Fraction(c0), Fraction(c1), Fraction(c2 * self.b)))

    @property
    def one(self) -> FieldElement:
        return self.from_w((1, 0, 0))

    @property
    def theta(self) -> FieldElement:
        return self.from_w((0, 1, 0))

    @property
    def phi(self) -> FieldElement:
        return self.from_w((0, 0, 1))

    def basis_element(self, i: int) -> FieldElement:
        c = [0, 0, 0]
        c[i] = 1
        return FieldElement(tuple(c))

    # ------------------------------------------------------------- arithmetic
    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(
            tuple(u * y.denom + v * x.denom for u, v in zip(x.coords, y.coords)), x.denom * y.denom
        )

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.add(x, -y)

    def scale(self, x: FieldElement, q) -> FieldElement:
        q = Fraction(q)
        return FieldElement(tuple(c * q.numerator for c in x.coords), x.denom * q.denominator)

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        out = [0, 0, 0]
        for (i, j), t in self._table.items():
            c = x.coords[i] * y.coords[j]
            if c:
                out[0] += c * t[0]
                out[1] += c * t[1]
                out[2] += c * t[2]
        return FieldElement(tuple(out), x.denom * y.denom)

    def pow(self, x: FieldElement, n: int) -> FieldElement:
        if n < 0:
            return self.pow(self.inverse(x), -n)
        result, base = self.one, x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def mult_matrix(self, x: FieldElement) -> list[list[int]]:
        """Integer matrix of multiplication by denom*x on the integral basis (columns)."""
        m = [[0] * 3 for _ in range(3)]
        for (i, j), t in self._table.items():
            c = x.coords[i]
            if c:
                for k in range(3):
                    m[k][j] += c * t[k]
        return m

    def norm(self, x: FieldElement) -> Fraction:
        return Fraction(_det3(self.mult_matrix(x)), x.denom**3)

    def trace(self, x: FieldElement) -> Fraction:
        m = self.mult_matrix(x)
        return Fraction(m[0][0] + m[1][1] + m[2][2], x.denom)

    def charpoly(self, x: FieldElement) -> tuple[Fraction, Fraction, Fraction]:
        m = self.mult_matrix(x)
        c2, c1, c0 = _charpoly3(m)
        dn = x.denom
        return Fraction(c2, dn), Fraction(c1, dn**2), Fraction(c0, dn**3)

    def adjugate(self, x: FieldElement) -> FieldElement:
        """N(x)/x, the product of the two other conjugates (integral if x is)."""
        c2, c1, _ = self.charpoly(x)
        # x^2 + c2 x + c1 = -c0/x = N(x)/x
        return self.add(self.add(self.mul(x, x), self.scale(x, c2)), self.scale(self.one, c1))

    def inverse(self, x: FieldElement) -> FieldElement:
        n = self.norm(x)
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.scale(self.adjugate(x), 1 / n)

    def is_integral(self, x: FieldElement) -> bool:
        return x.denom == 1

    def is_unit(self, x: FieldElement) -> bool:
        return x.denom == 1 and abs(self.norm(x)) == 1

    # ------------------------------------------------------------- embeddings
    def embed(self, x: FieldElement, precision_bits: int = 128):
        """(real embedding, complex embedding with theta -> zeta_3 * cbrt(d)).

        Computed with guard bits so that the returned values are accurate to
        about 2^(4 - precision_bits) relative to the coordinate sizes.
        """
        if precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        guard = 24 + max(abs(c) for c in x.coords).bit_length()
        with mpmath.workprec(precision_bits + guard):
            w = [mpmath.mpf(t.numerator) / t.denominator for t in self.to_w(x)]
            t = mpmath.cbrt(self.d)
            tp = t * t / self.b
            z = mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)
            real = w[0] + w[1] * t + w[2] * tp
            cplx = w[0] + w[1] * t * z + w[2] * tp * z * z
        with mpmath.workprec(precision_bits):
            return +real, +cplx

    def embedding_matrix(self, precision_bits: int):
        """3x3 mpmath matrix: rows (real, Re sigma, Im sigma), columns basis elements."""
        return _embedding_matrix(self, precision_bits)

    # ----------------------------------------------------------------- ideals
    def ideal(self, *gens: FieldElement) -> FracIdeal:
        """Ideal generated by integral elements."""
        cols = []
        modulus = 0
        for g in gens:
            if not g.is_integral:
                raise ValueError("generators must be integral")
            m = self.mult_matrix(g)
            cols.extend([m[0][j], m[1][j], m[2][j]] for j in range(3))
            modulus = math.gcd(modulus, abs(_det3(m)))
        if modulus == 0:
            raise ValueError("zero ideal")
        return FracIdeal(_hnf(cols, modulus))

    def unit_ideal(self) -> FracIdeal:
        return FracIdeal(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def ideal_basis(self, I: FracIdeal) -> list[FieldElement]:
        return [FieldElement(tuple(I.hnf[i][j] for i in range(3)), I.denom) for j in range(3)]

    def ideal_mul(self, I: FracIdeal, J: FracIdeal) -> FracIdeal:
        cols = []
        for x in self.ideal_basis(I):
            for y in self.ideal_basis(J):
                cols.append(self.mul(x, y).coords)
        modulus = I.min_integer * J.min_integer
        return FracIdeal(_hnf(cols, modulus), I.denom * J.denom)

    def ideal_add(self, I: FracIdeal, J: FracIdeal) -> FracIdeal:
        if I.denom != 1 or J.denom != 1:
            raise NotImplementedError("sums of fractional ideals")
        cols = [x.coords for x in self.ideal_basis(I) + self.ideal_basis(J)]
        return FracIdeal(_hnf(cols, math.gcd(I.min_integer, J.min_integer)))

    def ideal_pow(self, I: FracIdeal, n: int) -> FracIdeal:
        if n < 0:
            raise ValueError("negative ideal powers are not supported")
        result, base = self.unit_ideal(), I
        while n:
            if n & 1:
                result = self.ideal_mul(result, base)
            n >>= 1
            if n:
                base = self.ideal_mul(base, base)
        return result

    def ideal_norm(self, I: FracIdeal) -> Fraction:
        return I.norm

    def ideal_contains(self, I: FracIdeal, x: FieldElement) -> bool:
        v = [c * I.denom for c in x.coords]
        if any(c % x.denom for c in v):
            return False
        return solve_upper(I.hnf, [c // x.denom for c in v]) is not None

    def reduce_mod(self, I: FracIdeal, x: FieldElement) -> FieldElement:
        return FieldElement(tuple(reduce_mod_hnf(I.hnf, x.coords)))

    # ------------------------------------------------------- prime factoring
    @functools.lru_cache(maxsize=None)
    def factor_prime(self, ell: int) -> tuple[PrimeIdeal, ...]:
        """Prime ideals above ell with ramification and residue degree."""
        if ell == 3 and self.radicand.species is Species.TypeI:
            return factor_prime_by_algebra(ell, self)
        return factor_prime_by_kummer(ell, self)

    def valuation(self, P: PrimeIdeal, x: FieldElement) -> int:
        """v_P(x) for an integral nonzero x."""
        n = abs(self.norm(x))
        k = 0
        while n % P.ell == 0:
            n //= P.ell
            k += 1
        v = 0
        while v < k // P.f and self.ideal_contains(self.prime_power(P, v + 1), x):
            v += 1
        return v

    @functools.lru_cache(maxsize=None)
    def prime_power(self, P: PrimeIdeal, n: int) -> FracIdeal:
        if n == 0:
            return self.unit_ideal()
        if n == 1:
            return P.ideal
        return self.ideal_mul(self.prime_power(P, n - 1), P.ideal)


@functools.lru_cache(maxsize=64)
def _embedding_matrix(F: CubicField, precision_bits: int):
    with mpmath.workprec(precision_bits + 32):
        rows = [[0] * 3 for _ in range(3)]
        for j in range(3):
            r, c = F.embed(F.basis_element(j), precision_bits + 32)
            rows[0][j], rows[1][j], rows[2][j] = r, c.real, c.imag
        return mpmath.matrix(rows)


def _inverse3(B):
    det = _det3(B)
    adj = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            m = [[B[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            adj[j][i] = (-1) ** (i + j) * (m[0][0] * m[1][1] - m[0][1] * m[1][0])
    return [[adj[i][j] / det for j in range(3)] for i in range(3)]


def _hnf(cols, modulus):
    L = ColumnHNF(3, modulus)
    for c in cols:
        L.add(c)
    return L.matrix()


def build_field(r: Radicand) -> CubicField:
    return _build_field_cached(r.p, r.d, r.a, r.b, r.species)


@functools.lru_cache(maxsize=512)
def _build_field_cached(p, d, a, b, species):
    return CubicField(Radicand(p=p, d=d, a=a, b=b, species=species, d_raw=d, stripped=d))


def field_for(d: int) -> CubicField:
    """Field of the canonical radicand of d."""
    return build_field(normalize(d, 3))


# Module-level spellings of the element operations.
def mul(x: FieldElement, y: FieldElement, F: CubicField) -> FieldElement:
    return F.mul(x, y)


def norm(x: FieldElement, F: CubicField) -> Fraction:
    return F.norm(x)


def embed(x: FieldElement, F: CubicField, precision_bits: int = 128):
    return F.embed(x, precision_bits)


def factor_prime(ell: int, F: CubicField) -> tuple[PrimeIdeal, ...]:
    return F.factor_prime(ell)


def ideal_mul(I: FracIdeal, J: FracIdeal, F: CubicField) -> FracIdeal:
    return F.ideal_mul(I, J)


def ideal_pow(I: FracIdeal, n: int, F: CubicField) -> FracIdeal:
    return F.ideal_pow(I, n)


def ideal_norm(I: FracIdeal, F: CubicField | None = None) -> Fraction:
    return I.norm


# ------------------------------------------------------------------ primes
def _poly_at(F: CubicField, coeffs, x: FieldElement) -> FieldElement:
    """Evaluate a polynomial (highest degree first) at x by Horner's rule."""
    acc = F.scale(F.one, 0)
    for c in coeffs:
        acc = F.add(F.mul(acc, x), F.scale(F.one, int(c)))
    return acc


def _ramification(F: CubicField, ell: int, P: FracIdeal, f: int) -> int:
    ell_elt = F.scale(F.one, ell)
    e = 1
    while e * f < 3 and F.ideal_contains(F.ideal_pow(P, e + 1), ell_elt):
        e += 1
    return e


def factor_prime_by_kummer(ell: int, F: CubicField) -> tuple[PrimeIdeal, ...]:
    """Dedekind-Kummer factorization through theta or phi.

    Z[theta] has index b (species II) or 3b (species I) in O_L, Z[phi] has
    index a or 3a; one of the two is ell-maximal unless ell = 3 in species I.
    """
    if ell == 3 and F.radicand.species is Species.TypeI:
        raise ValueError("3 is a common index divisor in species I; use the algebra method")
    if F.b % ell:
        gen, c = F.theta, F.d
    else:
        gen, c = F.phi, F.a * F.a * F.b
    _, factors = gf_factor([1, 0, 0, (-c) % ell], ell, ZZ)
    out = []
    ell_elt = F.scale(F.one, ell)
    for g, e in factors:
        g = [int(x) for x in g]
        u = _poly_at(F, g, gen)
        I = F.ideal(ell_elt, u)
        out.append(PrimeIdeal(ell=ell, e=int(e), f=len(g) - 1, ideal=I, uniformizer_hint=u))
    return tuple(sorted(out, key=lambda P: (P.f, P.e, P.ideal.hnf)))


# ------------------------------------------------- algebra (Frobenius) route
def _rank_mod(rows, ell):
    return len(_echelon_mod(rows, ell))


def _echelon_mod(rows, ell):
    rows = [[x % ell for x in r] for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        inv = pow(piv[col], -1, ell)
        piv = [x * inv % ell for x in piv]
        rows = [[(x - r[col] * y) % ell for x, y in zip(r, piv)] for r in rows]
        out = [[(x - r[col] * y) % ell for x, y in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    return out


def _nullspace_mod(m, ell):
    """Basis of {v : m v = 0} over F_ell for a matrix given as rows."""
    n = len(m[0])
    ech = _echelon_mod(m, ell)
    pivots = [next(i for i, x in enumerate(r) if x) for r in ech]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fj in free:
        v = [0] * n
        v[fj] = 1
        for r, pc in zip(ech, pivots):
            v[pc] = (-r[fj]) % ell
        basis.append(v)
    return basis


def _qpositions(J: FracIdeal):
    return [i for i in range(3) if J.hnf[i][i] != 1]


def _quotient_matrix(F, J, ell, image):
    """Matrix (rows = quotient coordinates) of an F_ell-linear map on O/J."""
    pos = _qpositions(J)
    cols = []
    for j in pos:
        v = F.reduce_mod(J, image(F.basis_element(j))).coords
        cols.append([v[i] % ell for i in pos])
    return [[cols[c][r] for c in range(len(pos))] for r in range(len(pos))]


def _powmod_ideal(F, x, n, J):
    result, base = F.one, x
    while n:
        if n & 1:
            result = F.reduce_mod(J, F.mul(result, base))
        base = F.reduce_mod(J, F.mul(base, base))
        n >>= 1
    return result


def _berlekamp_dim(F, J, ell):
    pos = _qpositions(J)
    frob = _quotient_matrix(F, J, ell, lambda y: _powmod_ideal(F, y, ell, J))
    k = len(pos)
    m = [[frob[i][j] - (1 if i == j else 0) for j in range(k)] for i in range(k)]
    return k - _rank_mod(m, ell)


def _charpoly_mod(m, ell):
    """Characteristic polynomial (highest first) of a k x k matrix over F_ell, k <= 3."""
    k = len(m)
    if k == 1:
        return [1, (-m[0][0]) % ell]
    if k == 2:
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return [1, (-tr) % ell, det % ell]
    c2, c1, c0 = _charpoly3(m)
    return [1, c2 % ell, c1 % ell, c0 % ell]


def factor_prime_by_algebra(ell: int, F: CubicField) -> tuple[PrimeIdeal, ...]:
    """Decompose ell O_L through the F_ell-algebra O_L / ell O_L.

    The radical is the kernel of x -> x^(ell^k) with ell^k >= 3; the reduced
    quotient is split by characteristic polynomials of test elements until the
    Frobenius-fixed subalgebra of every part is one-dimensional.
    """
    ell_elt = F.scale(F.one, ell)
    ellO = F.ideal(ell_elt)
    k = 1
    while ell**k < 3:
        k += 1
    frobk = _quotient_matrix(F, ellO, ell, lambda y: _powmod_ideal(F, y, ell**k, ellO))
    kernel = _nullspace_mod(frobk, ell)
    gens = [ell_elt] + [FieldElement(tuple(v)) for v in kernel]
    rad = F.ideal(*gens)
    pending, primes = [rad], []
    tests = _test_elements(F)
    while pending:
        J = pending.pop()
        if _berlekamp_dim(F, J, ell) == 1:
            primes.append(J)
            continue
        for x in tests:
            m = _quotient_matrix(F, J, ell, lambda y: F.mul(x, y))
            _, factors = gf_factor(_charpoly_mod(m, ell), ell, ZZ)
            if len(factors) > 1:
                for h, _mult in factors:
                    hx = _poly_at(F, [int(c) for c in h], x)
                    pending.append(F.ideal_add(J, F.ideal(hx)))
                break
        else:
            raise ArithmeticError(f"could not split the algebra at {ell}")
    out = []
    for P in primes:
        f = len(_qpositions(P))
        out.append(PrimeIdeal(ell=ell, e=_ramification(F, ell, P, f), f=f, ideal=P))
    if sum(P.e * P.f for P in out) != 3:
        raise ArithmeticError(f"sum e*f != 3 at {ell}")
    return tuple(sorted(out, key=lambda P: (P.f, P.e, P.ideal.hnf)))


def _test_elements(F):
    e = [F.basis_element(i) for i in range(3)]
    out = [e[1], e[2]]
    for s, t in itertools.product(range(1, 4), repeat=2):
        out.append(F.add(F.scale(e[1], s), F.scale(e[2], t)))
    return out

"""Arithmetic in N = L(zeta_3) = K(theta), K = Q(omega), omega^2 = -1 - omega.

Elements are (c0 + c1*theta + c2*phi)/denom with c_i in Z[omega] stored as
integer pairs (x, y) = x + y*omega and phi = theta^2/b.  The generator of
Gal(N/K) acts by theta -> omega*theta (so phi -> omega^2*phi).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cubic_field import CubicField, FieldElement
from .errors import InternalInconsistency, RecognitionFailed

Zw = tuple[int, int]

PRECISION_LADDER = (128, 256, 512)
RECOGNITION_DENOMINATOR = 9


def zw_mul(u: Zw, v: Zw) -> Zw:
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0] - u[1] * v[1])


def zw_add(u: Zw, v: Zw) -> Zw:
    return (u[0] + v[0], u[1] + v[1])


def zw_scale(u: Zw, k: int) -> Zw:
    return (u[0] * k, u[1] * k)


OMEGA: Zw = (0, 1)
OMEGA2: Zw = (-1, -1)
# zeta_6 = -omega^2 = 1 + omega
ZETA6: Zw = (1, 1)
MU6: dict[Zw, int] = {}
_z = (1, 0)
for _k in range(6):
    MU6[_z] = _k  # zeta_6^k
    _z = zw_mul(_z, ZETA6)


@dataclass(frozen=True)
class SexticElement:
    coeffs: tuple[Zw, Zw, Zw]
    denom: int = 1

    def __post_init__(self):
        c = tuple((int(x), int(y)) for x, y in self.coeffs)
        dn = int(self.denom)
        if dn < 0:
            c, dn = tuple((-x, -y) for x, y in c), -dn
        g = math.gcd(dn, *(t for xy in c for t in xy))
        if g > 1:
            c, dn = tuple((x // g, y // g) for x, y in c), dn // g
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "denom", dn)

    def flat(self) -> list[int]:
        return [t for xy in self.coeffs for t in xy]


class SexticField:
    def __init__(self, F: CubicField):
        self.F = F
        self.a, self.b, self.d = F.a, F.b, F.d

    def __eq__(self, other):
        return isinstance(other, SexticField) and self.F == other.F

    def __hash__(self):
        return hash(("SexticField", self.F))

    # ------------------------------------------------------------ elements
    def from_cubic(self, x: FieldElement) -> SexticElement:
        w = self.F.to_w(x)
        den = math.lcm(*(t.denominator for t in w))
        return SexticElement(tuple((int(t * den), 0) for t in w), den)

    def from_k(self, u: Zw) -> SexticElement:
        return SexticElement((u, (0, 0), (0, 0)))

    @property
    def one(self) -> SexticElement:
        return self.from_k((1, 0))

    @property
    def zeta6(self) -> SexticElement:
        return self.from_k(ZETA6)

    @property
    def omega(self) -> SexticElement:
        return self.from_k(OMEGA)

    def mul(self, u: SexticElement, v: SexticElement) -> SexticElement:
        a, b = self.a, self.b
        p, q = u.coeffs, v.coeffs
        m = zw_mul
        c0 = zw_add(m(p[0], q[0]), zw_scale(zw_add(m(p[1], q[2]), m(p[2], q[1])), a * b))
        c1 = zw_add(zw_add(m(p[0], q[1]), m(p[1], q[0])), zw_scale(m(p[2], q[2]), a))
        c2 = zw_add(zw_add(m(p[0], q[2]), m(p[2], q[0])), zw_scale(m(p[1], q[1]), b))
        return SexticElement((c0, c1, c2), u.denom * v.denom)

    def pow(self, u: SexticElement, n: int) -> SexticElement:
        if n < 0:
            return self.pow(self.unit_inverse(u), -n)
        result, base = self.one, u
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def sigma(self, u: SexticElement, k: int = 1) -> SexticElement:
        c = u.coeffs
        for _ in range(k % 3):
            c = (c[0], zw_mul(c[1], OMEGA), zw_mul(c[2], OMEGA2))
        return SexticElement(c, u.denom)

    def relative_norm(self, u: SexticElement) -> Fraction | tuple[Fraction, Fraction]:
        """N_{N/K}(u) as a pair of rationals (x, y) meaning x + y*omega."""
        n = self.mul(self.mul(u, self.sigma(u, 1)), self.sigma(u, 2))
        if n.coeffs[1] != (0, 0) or n.coeffs[2] != (0, 0):
            raise InternalInconsistency("relative norm has nonzero theta-coordinates")
        x, y = n.coeffs[0]
        return Fraction(x, n.denom), Fraction(y, n.denom)

    def unit_inverse(self, u: SexticElement) -> SexticElement:
        nx, ny = self.relative_norm(u)
        if (nx.denominator, ny.denominator) != (1, 1) or (int(nx), int(ny)) not in MU6:
            raise ValueError("element is not a unit")
        k = MU6[(int(nx), int(ny))]
        inv_norm = self.from_k(_zeta6_power(-k))
        return self.mul(self.mul(self.sigma(u, 1), self.sigma(u, 2)), inv_norm)

    def mu6_exponent(self, u: SexticElement) -> int | None:
        """k with u = zeta_6^k, or None if u is not a sixth root of unity."""
        if u.denom != 1 or u.coeffs[1] != (0, 0) or u.coeffs[2] != (0, 0):
            return None
        return MU6.get(u.coeffs[0])

    # ----------------------------------------------------------- embeddings
    def embed(self, u: SexticElement, prec: int):
        """The three embeddings omega -> e^(2 pi i/3), theta -> cbrt(d) omega^k."""
        W = _basis_embeddings(self.F.d, self.F.b, prec)
        with mpmath.workprec(prec):
            out = []
            for k in range(3):
                s = mpmath.mpc(0)
                for i, (x, y) in enumerate(u.coeffs):
                    s += (x + y * W["omega"]) * W["w"][k][i]
                out.append(s / u.denom)
            return out

    def recognize(self, values, prec: int, denom: int = RECOGNITION_DENOMINATOR, value_error=None):
        """Round embedding values to an element with the given denominator.

        Returns (element or None, ambiguous flag).  None without the flag means
        some coordinate is provably not in (1/denom)Z; the flag means the
        precision is too low to decide.  ``value_error`` bounds the absolute
        error of the inputs (default: relative 2^-prec of the largest).
        """
        Minv = _coordinate_solver(self.F.d, self.F.b, prec)
        with mpmath.workprec(prec):
            rhs = mpmath.matrix([t for v in values for t in (v.real, v.imag)])
            sol = Minv * rhs
            scaled = [denom * sol[i] for i in range(6)]
            if value_error is None:
                value_error = max(abs(v) for v in values) * mpmath.mpf(2) ** -prec
            err = (2 * value_error * mpmath.mnorm(Minv, 1) + mpmath.mpf(2) ** -prec) * denom * 2**16
            if err > mpmath.mpf(1) / 16:
                return None, True
            ints = []
            for s in scaled:
                r = mpmath.nint(s)
                if abs(s - r) > err:
                    return None, False
                ints.append(int(r))
        return SexticElement(tuple(zip(ints[0::2], ints[1::2])), denom), False

    def cube_root(self, y: SexticElement) -> SexticElement | None:
        """z in N with z^3 = y, or None if y is not a cube in N.

        Candidates come from the 9 choices of cube roots in the three
        embeddings (the first is fixed, since omega*z is a cube root too);
        each recognized candidate is confirmed by exact cubing.
        """
        bits = max(abs(t) for t in y.flat()).bit_length() + 8
        for prec in PRECISION_LADDER:
            # For a unit the product of the embeddings has absolute value 1, so
            # the smallest is at least 1/max^2; enough bits for that one
            work = prec + 3 * bits
            Y = self.embed(y, work)
            any_ambiguous = False
            with mpmath.workprec(work):
                abs_err = mpmath.mpf(2) ** (bits - work)
                roots = [mpmath.cbrt(v) for v in Y]
                # d cbrt(Y) = dY / (3 Y^(2/3))
                err = max(abs_err / (3 * abs(r) ** 2) for r in roots)
                w0 = mpmath.expjpi(mpmath.mpf(2) / 3)
                for j1, j2 in itertools.product(range(3), repeat=2):
                    Z = [roots[0], roots[1] * w0**j1, roots[2] * w0**j2]
                    z, amb = self.recognize(Z, work, value_error=err)
                    any_ambiguous |= amb
                    if z is not None and self.pow(z, 3) == y:
                        return z
            if not any_ambiguous:
                return None
        raise RecognitionFailed("cube root recognition inconclusive at 512 bits")


def _zeta6_power(k: int) -> Zw:
    k %= 6
    for z, e in MU6.items():
        if e == k:
            return z
    raise AssertionError


@functools.lru_cache(maxsize=128)
def _basis_embeddings(d: int, b: int, prec: int):
    with mpmath.workprec(prec + 32):
        t = mpmath.cbrt(d)
        w0 = mpmath.expjpi(mpmath.mpf(2) / 3)
        w = [[mpmath.mpc(1), t * w0**k, t * t / b * w0 ** (2 * k)] for k in range(3)]
        return {"omega": w0, "w": w}


@functools.lru_cache(maxsize=128)
def _coordinate_solver(d: int, b: int, prec: int):
    """Inverse of the real 6x6 map (x_i, y_i) -> (Re, Im) of the three embeddings."""
    W = _basis_embeddings(d, b, prec)
    with mpmath.workprec(prec + 32):
        rows = [[0] * 6 for _ in range(6)]
        for k in range(3):
            for i in range(3):
                wx = W["w"][k][i]
                wy = W["omega"] * wx
                rows[2 * k][2 * i], rows[2 * k + 1][2 * i] = wx.real, wx.imag
                rows[2 * k][2 * i + 1], rows[2 * k + 1][2 * i + 1] = wy.real, wy.imag
        return mpmath.inverse(mpmath.matrix(rows))

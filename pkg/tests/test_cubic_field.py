from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, symbols
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.primes import prime_decomp

from dpftypes.cubic_field import (
    FieldElement,
    factor_prime_by_algebra,
    factor_prime_by_kummer,
    field_for,
)
from dpftypes.errors import DegenerateRadicand, InvalidPrime
from dpftypes.radicand import normalize

x = symbols("x")


def _canonical_cube_free(d):
    try:
        r = normalize(d, 3)
    except DegenerateRadicand:
        return False
    return r.is_canonical


RADICANDS = [d for d in range(2, 120) if _canonical_cube_free(d)]


def _oracle(d):
    T = Poly(x**3 - d)
    ZK, dK = round_two(T)
    return T, ZK, dK


@pytest.mark.parametrize("d", RADICANDS[::3])
def test_discriminant_matches_round_two(d):
    F = field_for(d)
    _, _, dK = _oracle(d)
    assert F.discriminant == int(dK)


@pytest.mark.parametrize("d", RADICANDS[::5])
@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11, 13])
def test_prime_splitting_matches_sympy(d, ell):
    F = field_for(d)
    T, ZK, dK = _oracle(d)
    want = sorted((P.e, P.f) for P in prime_decomp(ell, T=T, ZK=ZK, dK=dK))
    got = sorted((P.e, P.f) for P in F.factor_prime(ell))
    assert got == want
    # product of prime powers is (ell)
    I = F.unit_ideal()
    for P in F.factor_prime(ell):
        I = F.ideal_mul(I, F.prime_power(P, P.e))
    assert I == F.ideal(F.element(ell))


@pytest.mark.parametrize("d", [10, 17, 19, 26, 28, 35, 37, 44, 46])
def test_species_one_routes_agree(d):
    F = field_for(d)
    for ell in (2, 5, 7):
        a = sorted((P.e, P.f, P.ideal.hnf) for P in factor_prime_by_kummer(ell, F))
        b = sorted((P.e, P.f, P.ideal.hnf) for P in factor_prime_by_algebra(ell, F))
        assert a == b


def test_defining_relations():
    F = field_for(12)  # a = 3, b = 2
    th, ph = F.theta, F.phi
    assert F.mul(th, th) == F.scale(ph, 2)
    assert F.mul(th, ph) == F.element(6)
    assert F.mul(ph, ph) == F.scale(th, 3)
    assert F.norm(th) == 12
    assert F.trace(th) == 0


def test_unit_identity_d2():
    F = field_for(2)
    t = F.theta
    u = F.add(F.add(F.one, t), F.mul(t, t))
    assert F.mul(F.sub(t, F.one), u) == F.one


def test_species_one_basis_is_integral_not_in_order():
    F = field_for(10)
    w = F.basis_element(2)
    assert F.is_integral(w) and F.to_w(w)[2] == Fraction(1, 3)
    assert F.charpoly(w) == tuple(Fraction(c) for c in F.charpoly(w))


def test_p_must_be_three():
    from dpftypes.cubic_field import CubicField

    with pytest.raises(InvalidPrime):
        CubicField(normalize(2, 5))


elems = st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 10, 12, 17, 20]), elems, elems, elems)
def test_ring_axioms_and_norm(d, u, v, w):
    F = field_for(d)
    x, y, z = FieldElement(u), FieldElement(v), FieldElement(w)
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.norm(F.mul(x, y)) == F.norm(x) * F.norm(y)
    if any(u):
        assert F.mul(x, F.inverse(x)) == F.one
        # ideal norm of a principal ideal is |N(x)|
        assert F.ideal(x).norm == abs(F.norm(x))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 6, 10, 19]), elems)
def test_embeddings_multiply(d, u):
    F = field_for(d)
    x = FieldElement(u)
    r, c = F.embed(x, 128)
    r2, c2 = F.embed(F.mul(x, x), 128)
    with mpmath.workprec(128):
        assert abs(r * r - r2) <= 1e-25 * (1 + abs(r2))
        assert abs(c * c - c2) <= 1e-25 * (1 + abs(c2))
        assert abs(r * abs(c) ** 2 - F.norm(x)) <= 1e-20 * (1 + abs(F.norm(x)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 12, 10, 17]), elems, elems)
def test_ideal_multiplication_norms(d, u, v):
    F = field_for(d)
    if not any(u) or not any(v):
        return
    I, J = F.ideal(FieldElement(u)), F.ideal(FieldElement(v))
    IJ = F.ideal_mul(I, J)
    assert IJ.norm == I.norm * J.norm
    assert IJ == F.ideal(F.mul(FieldElement(u), FieldElement(v)))
    assert F.ideal_contains(I, FieldElement(u))


@pytest.mark.parametrize("d", [2, 10, 12, 17, 30])
def test_valuations(d):
    F = field_for(d)
    for ell in (2, 3, 5):
        for P in F.factor_prime(ell):
            assert F.valuation(P, F.element(ell)) == P.e

from fractions import Fraction

import mpmath
import pytest

from _oracle import ORACLE, SMALL

from dpftypes.cubic_field import field_for
from dpftypes.units import fundamental_unit, real_value, unit_lower_bound, units_in_range, verify_certificate


def _pari_unit(F, rec):
    return F.element(*(Fraction(c) for c in rec["unit"]))


def test_d2_unit_is_one_plus_theta_plus_theta_squared():
    F = field_for(2)
    U = fundamental_unit(F)
    assert U.fundamental == F.element(1, 1, 1)
    assert F.norm(U.fundamental) == 1
    assert verify_certificate(F, U)
    assert U.regulator == pytest.approx(1.3473773483, abs=1e-9)


def test_d3_regulator():
    F = field_for(3)
    U = fundamental_unit(F)
    assert U.fundamental == F.element(4, 3, 2)
    assert U.regulator == pytest.approx(2.5246814047, abs=1e-9)


def test_certificate_covers_range_from_lower_bound():
    F = field_for(7)
    U = fundamental_unit(F)
    cert = U.certificate
    assert cert.lower_bound == pytest.approx(float(unit_lower_bound(F)))
    assert cert.slabs[0][0] == pytest.approx(cert.lower_bound)
    for (lo1, hi1, _), (lo2, _, _) in zip(cert.slabs, cert.slabs[1:]):
        assert hi1 == pytest.approx(lo2)
    assert cert.searched_up_to >= float(real_value(F, U.fundamental))


def test_units_in_range_finds_powers():
    F = field_for(2)
    eps = fundamental_unit(F).fundamental
    r = real_value(F, eps)
    found, _ = units_in_range(F, r * 0.99, r**3 * 1.01)
    assert set(found) == {eps, F.mul(eps, eps), F.pow(eps, 3)}


@pytest.mark.parametrize("d", SMALL)
def test_matches_oracle_small(d):
    F = field_for(d)
    U = fundamental_unit(F)
    assert U.fundamental == _pari_unit(F, ORACLE[d])
    assert F.norm(U.fundamental) == 1
    with mpmath.workprec(80):
        assert U.regulator == pytest.approx(ORACLE[d]["regulator"], rel=1e-10)


@pytest.mark.slow
def test_matches_oracle_all():
    for d, rec in ORACLE.items():
        F = field_for(d)
        U = fundamental_unit(F)
        assert U.fundamental == _pari_unit(F, rec), d
        assert U.regulator == pytest.approx(rec["regulator"], rel=1e-10)

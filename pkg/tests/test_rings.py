from fractions import Fraction

import pytest
from hypothesis import given

from gwone.rings import CohClass, NotInvertibleError, RingSpec, SpecMismatchError

from strategies import coh_triples, coh_units, specs

N4 = RingSpec.absolute(4)


def h(spec, k=1):
    return CohClass.h_power(spec, k)


def test_truncation_kills_h_top():
    assert (h(N4, 4) * h(N4)).is_zero()


def test_multiplicative_identity():
    c = CohClass.from_terms(N4, {(2, ()): Fraction(7, 3), (0, ()): 1})
    assert CohClass.one(N4) * c == c


def test_geometric_series_is_inverse_of_one_plus_h():
    geometric = CohClass.from_terms(N4, {(k, ()): Fraction((-1) ** k) for k in range(5)})
    one_plus_h = CohClass.one(N4) + h(N4)
    assert one_plus_h * geometric == CohClass.one(N4)
    assert one_plus_h.inverse() == geometric


def test_integrate_picks_top_h_coefficient():
    assert h(N4, 4).integrate() == 1
    assert h(N4, 3).integrate() == 0
    mixed = h(N4, 4) * 2875 + h(N4, 3) * 7
    assert mixed.integrate() == 2875


def test_integrate_relative_returns_base_class():
    from gwone.relative import relative_ring

    spec = relative_ring(2, 2)
    s1 = CohClass.generator(spec, 0)
    value = (s1 * h(spec, 2)).integrate()
    assert isinstance(value, CohClass)
    assert value == s1


def test_h_rule_rewrites_top_power():
    from gwone.relative import relative_ring

    spec = relative_ring(2, 2)
    s1 = CohClass.generator(spec, 0)
    s2 = CohClass.generator(spec, 1)
    # h^3 = -c_1 h^2 - c_2 h with c_1 = -s_1, c_2 = s_1^2 - s_2
    expected = s1 * h(spec, 2) + (s2 - s1 * s1) * h(spec)
    assert CohClass.h_power(spec, 3) == expected


def test_spec_mismatch_raises():
    a = CohClass.one(N4)
    b = CohClass.one(RingSpec.absolute(3))
    with pytest.raises(SpecMismatchError):
        a + b
    with pytest.raises(SpecMismatchError):
        a * b


def test_zero_coefficients_are_not_stored():
    c = CohClass.from_terms(N4, {(1, ()): Fraction(0)})
    assert c.is_zero()
    assert (c - c).is_zero()


def test_non_unit_has_no_inverse():
    with pytest.raises(NotInvertibleError):
        h(N4).inverse()


@given(coh_triples())
def test_mul_commutative(triple):
    a, b, _ = triple
    assert a * b == b * a


@given(coh_triples())
def test_mul_associative(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@given(coh_triples())
def test_mul_distributive(triple):
    a, b, c = triple
    assert a * (b + c) == a * b + a * c


@given(coh_units())
def test_unit_inverse(unit):
    assert unit * unit.inverse() == CohClass.one(unit.spec)


@given(specs)
def test_scalar_arithmetic(spec):
    two = CohClass.scalar(spec, 2)
    assert 3 * two == CohClass.scalar(spec, 6)
    assert two * Fraction(1, 2) == CohClass.one(spec)
    assert (two - two).is_zero()
    assert (-two) + two == CohClass.zero(spec)


def test_str_rendering():
    c = h(N4) * Fraction(-770) + CohClass.scalar(N4, Fraction(1, 2))
    assert str(c) == "1/2 - 770*h"
    assert str(CohClass.zero(N4)) == "0"

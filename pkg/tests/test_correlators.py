from fractions import Fraction
from math import comb

import pytest

from gwone.correlators import (
    Classification,
    ClassificationError,
    classify,
    fano_ge2_correlator,
    fano_index1_correlator,
    one_point_invariant,
    phi,
    pn_one_point,
)
from gwone.laurent import LaurentPoly
from gwone.rings import CohClass, RingSpec

QUINTIC = classify(4, (5,))


def h_class(spec, k=1):
    return CohClass.h_power(spec, k)


def test_classification():
    assert QUINTIC.classification is Classification.CALABI_YAU
    assert classify(3, (3,)).classification is Classification.FANO_INDEX_ONE
    assert classify(4, (1, 1)).classification is Classification.FANO_INDEX_GE2
    assert classify(4, (6,)).classification is Classification.GENERAL_TYPE
    assert classify(3, ()).classification is Classification.FANO_INDEX_GE2


def test_classify_validates_input():
    with pytest.raises(ValueError):
        classify(0, (1,))
    with pytest.raises(ValueError):
        classify(3, (0,))


def test_phi_degree_zero_is_class_of_target():
    spec = QUINTIC.spec
    assert phi(QUINTIC, 0) == LaurentPoly.single(spec, 0, h_class(spec) * 5)
    model = classify(5, (2, 3))
    assert phi(model, 0) == LaurentPoly.single(model.spec, 0, h_class(model.spec, 2) * 6)


def test_phi_hyperplane_in_p3():
    model = classify(3, (1,))
    spec = model.spec
    expected = LaurentPoly(
        spec,
        {
            -3: h_class(spec),
            -4: h_class(spec, 2) * -3,
            -5: h_class(spec, 3) * 6,
        },
    )
    assert phi(model, 1) == expected


def test_phi_quintic_top_row():
    value = phi(QUINTIC, 1)
    assert value.coefficient(0) == h_class(QUINTIC.spec) * 600
    assert value.t_max() == 0


def test_pn_one_point_p1():
    spec = RingSpec.absolute(1)
    expected = LaurentPoly(spec, {-2: CohClass.one(spec), -3: h_class(spec) * -2})
    assert pn_one_point(1, 1) == expected


def test_pn_one_point_matches_phi_with_no_degrees():
    for n in (1, 2, 3, 4):
        model = classify(n, ())
        for d in (1, 2):
            assert pn_one_point(n, d) == phi(model, d)


def test_pn_one_point_p4_has_no_t_minus_2_term():
    assert pn_one_point(4, 1).coefficient(-2).is_zero()
    assert pn_one_point(4, 1).t_max() == -5


def test_fano_ge2_equals_phi():
    model = classify(5, (1, 2))
    assert fano_ge2_correlator(model, 2) == phi(model, 2)


def test_fano_ge2_two_hyperplanes_in_p4():
    # phi_1 simplifies to h^2 / (h+t)^3; expand by the binomial series
    model = classify(4, (1, 1))
    spec = model.spec
    expected = LaurentPoly.zero(spec)
    for j in range(3):
        coeff = Fraction((-1) ** j * comb(j + 2, 2))
        expected = expected + LaurentPoly.single(spec, -3 - j, h_class(spec, 2 + j) * coeff)
    assert fano_ge2_correlator(model, 1) == expected


def test_fano_ge2_rejects_other_classes():
    with pytest.raises(ClassificationError):
        fano_ge2_correlator(QUINTIC, 1)
    with pytest.raises(ClassificationError):
        fano_ge2_correlator(classify(3, (3,)), 1)


def test_index1_cubic_surface():
    model = classify(3, (3,))
    spec = model.spec
    correction = LaurentPoly.single(spec, -1, h_class(spec) * -18)
    assert fano_index1_correlator(model, 1) == phi(model, 1) + correction


def test_index1_two_quadrics_in_p4():
    model = classify(4, (2, 2))
    spec = model.spec
    correction = phi(model, 0).shift_t(-1) * -4
    assert fano_index1_correlator(model, 1) == phi(model, 1) + correction


def test_index1_degree_zero_is_phi_zero():
    model = classify(4, (2, 2))
    assert fano_index1_correlator(model, 0) == phi(model, 0)


def test_index1_rejects_other_classes():
    with pytest.raises(ClassificationError):
        fano_index1_correlator(QUINTIC, 1)


def test_cubic_surface_has_27_lines():
    lines = one_point_invariant(fano_index1_correlator(classify(3, (3,)), 1), 0, 1)
    assert lines == 27


def test_one_point_invariant_missing_exponent_is_zero():
    corr = fano_index1_correlator(classify(3, (3,)), 1)
    assert one_point_invariant(corr, 50, 0) == 0


def test_one_point_invariant_validates_exponents():
    corr = phi(classify(3, (1,)), 1)
    with pytest.raises(ValueError):
        one_point_invariant(corr, -1, 0)


def test_phi_is_homogeneous():
    for model in (classify(4, (1, 2)), classify(5, (2, 3)), classify(3, ())):
        for d in (1, 2, 3):
            assert phi(model, d).is_homogeneous(model.correlator_weight(d))


def test_fano_correlators_have_top_power_below_minus_one():
    for d in (1, 2, 3):
        assert fano_ge2_correlator(classify(4, (1, 1)), d).t_max() <= -2
        assert fano_index1_correlator(classify(3, (3,)), d).t_max() <= -2


def test_phi_divisible_by_h_to_the_m():
    model = classify(5, (2, 3))
    for _, cls in phi(model, 2).items():
        assert all(k >= model.m for k, _, _ in cls.terms())

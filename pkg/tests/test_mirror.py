from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gwone.calabi_yau import solve_lambdas_up_to
from gwone.correlators import ClassificationError, classify, phi
from gwone.mirror import (
    corollary_transform,
    double_comb_series,
    mirror_coefficients,
    mirror_comb_correlator,
    verify_mirror_identity,
)
from gwone.rings import CohClass, RingSpec
from gwone.series import QSeries

from strategies import fractions

QUINTIC = classify(4, (5,))
SCALARS = RingSpec.absolute(0)


def test_transform_degree_one_is_identity():
    x = {1: Fraction(3)}
    y = {1: Fraction(7, 2)}
    assert corollary_transform(x, y, 1) == {1: Fraction(7, 2)}


def test_transform_degree_two_formula():
    x = {1: Fraction(2), 2: Fraction(5)}
    y = {1: Fraction(3), 2: Fraction(11)}
    out = corollary_transform(x, y, 2)
    assert out[2] == y[2] + y[1] * x[1] / 2


def test_transform_kills_zero_y():
    x = {e: Fraction(e) for e in range(1, 5)}
    y = {e: Fraction(0) for e in range(1, 5)}
    assert all(v == 0 for v in corollary_transform(x, y, 4).values())


def test_transform_accepts_ring_valued_y():
    spec = RingSpec.absolute(3)
    x = {1: Fraction(2), 2: Fraction(1)}
    y = {1: CohClass.h_power(spec, 1), 2: CohClass.h_power(spec, 2)}
    out = corollary_transform(x, y, 2)
    assert out[2] == CohClass.h_power(spec, 2) + CohClass.h_power(spec, 1)


def test_mirror_coefficients_quintic():
    lambdas = solve_lambdas_up_to(QUINTIC, 2)
    data = mirror_coefficients(lambdas)
    assert data.a[1] == Fraction(-770) and data.b[1] == Fraction(-120)
    assert data.a[2] == Fraction(-124925) and data.b[2] == Fraction(-13800)


def test_mirror_coefficients_of_zero_lambdas():
    from gwone.calabi_yau import LambdaForm

    zero = {e: LambdaForm(Fraction(0), Fraction(0)) for e in (1, 2, 3)}
    data = mirror_coefficients(zero)
    assert all(v == 0 for v in data.a.values())
    assert all(v == 0 for v in data.b.values())


def test_f_series_has_zero_constant_term():
    lambdas = solve_lambdas_up_to(QUINTIC, 2)
    data = mirror_coefficients(lambdas)
    assert data.f_series(QUINTIC.spec).coefficient(0).is_zero()
    assert data.g_series(QUINTIC.spec).coefficient(0).is_zero()


small_maps = st.fixed_dictionaries({e: fractions for e in range(1, 5)})


def test_double_comb_series_with_zero_y_is_one():
    x = {e: Fraction(1) for e in range(1, 5)}
    y = {e: Fraction(0) for e in range(1, 5)}
    assert double_comb_series(x, y, 4, SCALARS) == QSeries.one(SCALARS, 4)


@settings(max_examples=25)
@given(small_maps, small_maps, small_maps, fractions, fractions)
def test_log_of_double_comb_series_is_linear_in_y(x, y1, y2, c1, c2):
    order = 4
    mixed = {e: c1 * y1[e] + c2 * y2[e] for e in y1}
    lhs = double_comb_series(x, mixed, order, SCALARS).log()
    rhs = double_comb_series(x, y1, order, SCALARS).log() * c1 + double_comb_series(
        x, y2, order, SCALARS
    ).log() * c2
    assert lhs == rhs


@settings(max_examples=25)
@given(small_maps, small_maps)
def test_transform_exponentiates_to_double_comb_series(x, y):
    order = 4
    transformed = corollary_transform(x, y, order)
    rebuilt = QSeries.from_scalars(SCALARS, order, transformed).exp()
    assert rebuilt == double_comb_series(x, y, order, SCALARS)


def test_mirror_comb_correlator_degree_zero():
    lambdas = solve_lambdas_up_to(QUINTIC, 1)
    data = mirror_coefficients(lambdas)
    assert mirror_comb_correlator(QUINTIC, 0, data) == phi(QUINTIC, 0)


def test_mirror_identity_quintic_low_order():
    report = verify_mirror_identity(QUINTIC, 2)
    assert report.holds
    assert report.first_failing_degree is None


def test_mirror_identity_degree_zero_is_trivial():
    report = verify_mirror_identity(QUINTIC, 0)
    assert report.holds


def test_mirror_identity_other_threefolds():
    for degrees in ((3, 3), (2, 4)):
        report = verify_mirror_identity(classify(5, degrees), 2)
        assert report.holds, degrees


def test_mirror_identity_rejects_fano():
    with pytest.raises(ClassificationError):
        verify_mirror_identity(classify(4, (1, 1)), 2)


def test_mirror_comparison_is_sensitive():
    from gwone.calabi_yau import cy_correlator
    from gwone.mirror import MirrorData

    lambdas = solve_lambdas_up_to(QUINTIC, 2)
    data = mirror_coefficients(lambdas)
    broken = MirrorData(
        a=dict(data.a), b={**data.b, 2: data.b[2] + 1}, order=data.order
    )
    assert mirror_comb_correlator(QUINTIC, 2, broken) != cy_correlator(
        QUINTIC, 2, lambdas
    )

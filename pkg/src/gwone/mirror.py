"""The change of variables relating the correlator series to the phi series.

Write Sigma(q) for the correlator generating series and Phi(q) for the phi
series of a Calabi-Yau model.  The lambda table transforms into mirror-map
coefficients (a_e, b_e) through a "cast out the non-linear terms" rule, and
the two series are then related by

    Sigma(q) = exp((h/t) f(q) + g(q)) * Phi(q * exp(f(q)))

with f = sum a_e q^e and g = sum b_e q^e.  This module implements the
transform, the double-comb generating function behind it (whose logarithm
is linear in the y-variables), and an exact verifier for the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, pairwise
from math import factorial
from typing import Mapping, TypeVar

from .calabi_yau import LambdaForm, cy_correlator, enumerate_combs, solve_lambdas_up_to
from .correlators import CIModel, phi
from .laurent import LaurentPoly
from .rings import CohClass, RingSpec
from .series import QSeries

V = TypeVar("V")


def _interior_chains(d: int):
    """All chains 0 < d_1 < ... < d_r = d, as tuples."""
    inner = chain.from_iterable(combinations(range(1, d), k) for k in range(d))
    for s in inner:
        yield s + (d,)


def corollary_transform(
    x: Mapping[int, Fraction], y: Mapping[int, V], max_degree: int
) -> dict[int, V]:
    """y'_d = sum over chains 0 < d_1 < ... < d_r = d of
    y_{d_1} * prod_{i=2}^r (x_{d_i - d_{i-1}} * d_{i-1}) / r!.

    The y-values may live in any commutative coefficient space that supports
    addition and multiplication by Fraction.
    """
    out: dict[int, V] = {}
    for d in range(1, max_degree + 1):
        total = None
        for endpoints in _interior_chains(d):
            weight = Fraction(1, factorial(len(endpoints)))
            for prev, nxt in pairwise(endpoints):
                weight *= Fraction(x[nxt - prev]) * prev
            term = y[endpoints[0]] * weight
            total = term if total is None else total + term
        out[d] = total
    return out


def double_comb_series(
    x: Mapping[int, Fraction],
    y: Mapping[int, Fraction],
    order: int,
    spec: RingSpec | None = None,
) -> QSeries:
    """The generating function F(q) = sum over chains of
    prod (y_{d_i - d_{i-1}} + x_{d_i - d_{i-1}} * d_{i-1}) / r! per degree.

    F(x, 0) = 1 because every chain carries a y_{d_1} factor; log F is
    linear in the y-variables, which is what makes the corollary transform
    work.  Returned as a scalar-coefficient series for property testing.
    """
    if spec is None:
        spec = RingSpec.absolute(0)
    values: dict[int, Fraction] = {0: Fraction(1)}
    for d in range(1, order + 1):
        total = Fraction(0)
        for endpoints in _interior_chains(d):
            term = Fraction(1, factorial(len(endpoints)))
            prev = 0
            for nxt in endpoints:
                term *= Fraction(y[nxt - prev]) + Fraction(x[nxt - prev]) * prev
                prev = nxt
            total += term
        values[d] = total
    return QSeries.from_scalars(spec, order, values)


@dataclass(frozen=True)
class MirrorData:
    """Mirror-map coefficients a_e, b_e for degrees 1..order."""

    a: dict[int, Fraction]
    b: dict[int, Fraction]
    order: int

    def f_series(self, spec: RingSpec) -> QSeries:
        return QSeries.from_scalars(spec, self.order, self.a)

    def g_series(self, spec: RingSpec) -> QSeries:
        return QSeries.from_scalars(spec, self.order, self.b)


def mirror_coefficients(
    lambdas: Mapping[int, LambdaForm], order: int | None = None
) -> MirrorData:
    """Transform the lambda table into mirror-map coefficients.

    The transform is linear in its y-input, so the pair (alpha_e, beta_e) is
    transported componentwise: a = transform over the alphas, b = transform
    over the betas, with the x-weights given by the alphas in both runs.
    """
    if order is None:
        order = max(lambdas, default=0)
    alphas = {e: lambdas[e].alpha for e in range(1, order + 1)}
    betas = {e: lambdas[e].beta for e in range(1, order + 1)}
    return MirrorData(
        a=corollary_transform(alphas, alphas, order),
        b=corollary_transform(alphas, betas, order),
        order=order,
    )


def mirror_comb_correlator(model: CIModel, d: int, mirror: MirrorData) -> LaurentPoly:
    """The degree-d comb sum with (a, b) in place of the lambdas.

    Each tooth contributes a_e * (d_1 + h/t) + b_e where d_1 is the comb's
    first endpoint; this is the per-degree form of the mirror identity.
    """
    spec = model.spec
    if d == 0:
        return phi(model, 0)
    out = LaurentPoly.zero(spec)
    for comb in enumerate_combs(d):
        d1 = comb.endpoints[0]
        term = phi(model, d1)
        for delta in comb.deltas:
            factor = LaurentPoly(
                spec,
                {
                    0: CohClass.scalar(spec, mirror.a[delta] * d1 + mirror.b[delta]),
                    -1: CohClass.h_power(spec, 1) * mirror.a[delta],
                },
            )
            term = term * factor
        out = out + term * Fraction(1, factorial(comb.tooth_count))
    return out


@dataclass(frozen=True)
class MirrorReport:
    """Outcome of the exact mirror-identity verification."""

    holds: bool
    first_failing_degree: int | None
    order: int
    mirror: MirrorData


def verify_mirror_identity(
    model: CIModel, order: int, lambdas: Mapping[int, LambdaForm] | None = None
) -> MirrorReport:
    """Check Sigma(q) = exp((h/t) f + g) * Phi(q e^{f}) exactly mod q^{order+1}.

    Both the series identity and its per-degree comb form are evaluated; a
    degree fails if either disagrees with the correlator series.
    """
    spec = model.spec
    if lambdas is None:
        lambdas = solve_lambdas_up_to(model, order)
    sigma = QSeries.from_coefficients(
        spec,
        order,
        {d: cy_correlator(model, d, lambdas) for d in range(order + 1)},
    )
    phi_series = QSeries.from_coefficients(
        spec, order, {d: phi(model, d) for d in range(order + 1)}
    )
    mirror = mirror_coefficients(lambdas, order)
    f = mirror.f_series(spec)
    g = mirror.g_series(spec)
    h_over_t = LaurentPoly.single(spec, -1, CohClass.h_power(spec, 1))
    prefactor = (f.scale(h_over_t) + g).exp()
    rhs = prefactor * phi_series.substitute(f)
    failing = None
    for d in range(order + 1):
        if rhs.coefficient(d) != sigma.coefficient(d):
            failing = d
            break
        if mirror_comb_correlator(model, d, mirror) != sigma.coefficient(d):
            failing = d
            break
    return MirrorReport(
        holds=failing is None,
        first_failing_degree=failing,
        order=order,
        mirror=mirror,
    )

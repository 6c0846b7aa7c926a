"""Calabi-Yau correlators via the self-recursive comb-sum formula.

For a Calabi-Yau model the degree-d correlator is a sum over "comb" types
0 <= d_1 < ... < d_{r+1} = d of

    phi_{d_1} * prod_{i=1}^r lambda_{Delta_i}(h + d_i*t, t) / (r! t^r)

with Delta_i = d_{i+1} - d_i and one linear form lambda_e = alpha_e*h +
beta_e*t per degree.  The formula computes its own lambdas: the correlator
carries no t^0 or t^{-1} terms, so the simple comb (0, d) -- whose
contribution is phi_0 * lambda_d / t -- must cancel those two "error"
coefficients of the sum of all other combs.  Solving the two cancellation
equations degree by degree yields the whole lambda table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, pairwise
from math import factorial
from typing import Mapping

from .correlators import (
    CIModel,
    Classification,
    ClassificationError,
    classify,
    fano_ge2_correlator,
    fano_index1_correlator,
    one_point_invariant,
    phi,
)
from .laurent import LaurentPoly
from .rings import CohClass, RingSpec


class LambdaShapeError(ValueError):
    """An error coefficient did not have the pure-monomial shape required."""


@dataclass(frozen=True)
class Comb:
    """Endpoints 0 <= d_1 < ... < d_{r+1} = d of a boundary stratum."""

    endpoints: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.endpoints:
            raise ValueError("a comb needs at least one endpoint")
        if self.endpoints[0] < 0:
            raise ValueError("endpoints must be >= 0")
        if any(a >= b for a, b in pairwise(self.endpoints)):
            raise ValueError("endpoints must be strictly increasing")

    @property
    def degree(self) -> int:
        return self.endpoints[-1]

    @property
    def tooth_count(self) -> int:
        return len(self.endpoints) - 1

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in pairwise(self.endpoints))

    def is_simple(self) -> bool:
        return self.endpoints == (0, self.degree)


def enumerate_combs(d: int) -> list[Comb]:
    """All 2^d combs of degree d, ordered lexicographically by endpoints."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    subsets = chain.from_iterable(combinations(range(d), k) for k in range(d + 1))
    return sorted(
        (Comb(tuple(s) + (d,)) for s in subsets), key=lambda c: c.endpoints
    )


@dataclass(frozen=True)
class LambdaForm:
    """The linear form alpha*h + beta*t solved at one degree."""

    alpha: Fraction
    beta: Fraction

    def shifted(self, spec: RingSpec, position: int) -> LaurentPoly:
        """The form evaluated at (h + position*t, t)."""
        return LaurentPoly(
            spec,
            {
                0: CohClass.h_power(spec, 1) * self.alpha,
                1: CohClass.scalar(spec, self.alpha * position + self.beta),
            },
        )

    def to_laurent(self, spec: RingSpec) -> LaurentPoly:
        return self.shifted(spec, 0)

    def __str__(self) -> str:
        return f"({self.alpha})*h + ({self.beta})*t"


def cy_term(model: CIModel, comb: Comb, lambdas: Mapping[int, LambdaForm]) -> LaurentPoly:
    """One comb's contribution: phi_{d_1} * prod lambda_{Delta_i}(h+d_i t, t) / (r! t^r)."""
    spec = model.spec
    out = phi(model, comb.endpoints[0])
    for position, nxt in pairwise(comb.endpoints):
        delta = nxt - position
        if delta not in lambdas:
            raise ValueError(f"missing lambda for tooth degree {delta}")
        out = out * lambdas[delta].shifted(spec, position)
    r = comb.tooth_count
    if r:
        out = out.shift_t(-r) * Fraction(1, factorial(r))
    return out


def _require_calabi_yau(model: CIModel) -> None:
    if model.classification is Classification.GENERAL_TYPE:
        raise ClassificationError(f"general type: l_1+...+l_m > n+1 for {model}")
    if model.classification is not Classification.CALABI_YAU:
        raise ClassificationError(f"not Calabi-Yau: l_1+...+l_m != n+1 for {model}")


def _partial_comb_sum(
    model: CIModel, d: int, lambdas: Mapping[int, LambdaForm]
) -> LaurentPoly:
    """Sum of all degree-d comb terms except the simple comb (0, d)."""
    out = LaurentPoly.zero(model.spec)
    for comb in enumerate_combs(d):
        if comb.is_simple():
            continue
        out = out + cy_term(model, comb, lambdas)
    return out


def _pure_h_multiple(cls: CohClass, h_exp: int) -> Fraction:
    """The rational rho with cls == rho * h^{h_exp}; raises on any other shape."""
    rho = Fraction(0)
    for k, mono, c in cls.terms():
        if k != h_exp or mono != ():
            raise LambdaShapeError(
                f"error coefficient has a term at h^{k}, expected a multiple of h^{h_exp}"
            )
        rho = c
    return rho


def _integrate_rows(poly: LaurentPoly, h_exp: int) -> dict[int, Fraction]:
    """Integrate h^{h_exp} * poly over the fiber, one rational per t-power."""
    spec = poly.spec
    weight = CohClass.h_power(spec, h_exp)
    out = {}
    for exp, cls in poly.items():
        val = (weight * cls).integrate()
        if val:
            out[exp] = val
    return out


def lambda_readoff(
    model: CIModel,
    d: int,
    lambdas: Mapping[int, LambdaForm],
    partial: LaurentPoly | None = None,
) -> LambdaForm:
    """Read (alpha_d, beta_d) off by fiber integration.

    The simple-comb term phi_0 * lambda_d / t equals minus the t^{-1} and
    t^0 part of the partial comb sum, so

        alpha_d = (1 / prod l_i) * [t^{-1}] integral of h^{n-m-1} * (phi_0 lambda_d / t)
        beta_d  = (1 / prod l_i) * [t^0]   integral of h^{n-m}   * (phi_0 lambda_d / t)

    This is an independent extraction path from the monomial-shape division
    used by :func:`solve_lambda`.
    """
    if partial is None:
        partial = _partial_comb_sum(model, d, lambdas)
    spec = model.spec
    simple_term = -(
        LaurentPoly.from_class(partial.coefficient(-1), -1)
        + LaurentPoly.from_class(partial.coefficient(0), 0)
    )
    product = Fraction(model.degree_product)
    alpha_rows = _integrate_rows(simple_term, model.n - model.m - 1)
    beta_rows = _integrate_rows(simple_term, model.n - model.m)
    return LambdaForm(
        alpha=alpha_rows.get(-1, Fraction(0)) / product,
        beta=beta_rows.get(0, Fraction(0)) / product,
    )


def solve_lambda(
    model: CIModel, d: int, lambdas: Mapping[int, LambdaForm]
) -> LambdaForm:
    """Solve the degree-d linear form from the two cancellation equations.

    Requires lambdas for all degrees below d.  The t^{-1} error coefficient
    of the partial comb sum must be a rational multiple of h^{m+1} and the
    t^0 coefficient a multiple of h^m; anything else signals a bug and
    raises :class:`LambdaShapeError`.  The result is cross-checked against
    the fiber-integral read-off before being returned.
    """
    _require_calabi_yau(model)
    if d < 1:
        raise ValueError("degree must be >= 1")
    for e in range(1, d):
        if e not in lambdas:
            raise ValueError(f"missing lambda for degree {e}")
    if model.m + 1 > model.n:
        raise LambdaShapeError(
            "cannot separate the cancellation equations when m + 1 > n"
        )
    partial = _partial_comb_sum(model, d, lambdas)
    product = Fraction(model.degree_product)
    assert product != 0
    rho1 = _pure_h_multiple(partial.coefficient(-1), model.m + 1)
    rho0 = _pure_h_multiple(partial.coefficient(0), model.m)
    solved = LambdaForm(alpha=-rho1 / product, beta=-rho0 / product)
    check = lambda_readoff(model, d, lambdas, partial=partial)
    if solved != check:
        raise LambdaShapeError(
            f"cancellation and integral read-off disagree at degree {d}: "
            f"{solved} vs {check}"
        )
    return solved


def solve_lambdas_up_to(model: CIModel, max_degree: int) -> dict[int, LambdaForm]:
    """The lambda table for degrees 1..max_degree, solved recursively."""
    _require_calabi_yau(model)
    lambdas: dict[int, LambdaForm] = {}
    for d in range(1, max_degree + 1):
        lambdas[d] = solve_lambda(model, d, lambdas)
    return lambdas


def cy_correlator(
    model: CIModel, d: int, lambdas: Mapping[int, LambdaForm] | None = None
) -> LaurentPoly:
    """The degree-d Calabi-Yau correlator: the full sum over all 2^d combs."""
    _require_calabi_yau(model)
    if d == 0:
        return phi(model, 0)
    if lambdas is None:
        lambdas = solve_lambdas_up_to(model, d)
    out = LaurentPoly.zero(model.spec)
    for comb in enumerate_combs(d):
        out = out + cy_term(model, comb, lambdas)
    if not out.is_zero() and out.t_max() >= -1:
        raise LambdaShapeError(f"degree-{d} comb sum retains t^{out.t_max()} terms")
    return out


def correlator(model: CIModel, d: int) -> LaurentPoly:
    """The one-point correlator of any Fano or Calabi-Yau model."""
    cls = model.classification
    if d == 0:
        if cls is Classification.GENERAL_TYPE:
            raise ClassificationError(f"general type: l_1+...+l_m > n+1 for {model}")
        return phi(model, 0)
    if cls is Classification.FANO_INDEX_GE2:
        return fano_ge2_correlator(model, d)
    if cls is Classification.FANO_INDEX_ONE:
        return fano_index1_correlator(model, d)
    if cls is Classification.CALABI_YAU:
        return cy_correlator(model, d)
    raise ClassificationError(f"general type: l_1+...+l_m > n+1 for {model}")


def _divisors(d: int) -> list[int]:
    return [e for e in range(1, d + 1) if d % e == 0]


def aspinwall_morrison(physical_counts: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Convert physical counts n_d/d into expected immersed-curve counts N_d.

    Inverts the multiple-cover relation n_d/d = sum over e | d of
    N_{d/e} / e^3, i.e. N_d = n_d/d - sum over proper divisors e of d of
    N_e * (e/d)^3.  Every divisor of a requested degree must be supplied.
    """
    out: dict[int, Fraction] = {}
    for d in sorted(physical_counts):
        total = Fraction(physical_counts[d])
        for e in _divisors(d)[:-1]:
            if e not in out:
                raise ValueError(f"missing value for divisor {e} of degree {d}")
            total -= out[e] * Fraction(e, d) ** 3
        out[d] = total
    return out


@dataclass(frozen=True)
class CyRow:
    """One degree of the Calabi-Yau pipeline for a threefold model."""

    degree: int
    lam: LambdaForm
    n_d: Fraction
    m_d: Fraction

    @property
    def physical_count(self) -> Fraction:
        return self.n_d / self.degree


@dataclass(frozen=True)
class QuinticReport:
    """Lambda table, invariants and immersed counts for a threefold model."""

    model: CIModel
    rows: tuple[CyRow, ...]
    immersed_counts: dict[int, Fraction]

    def row(self, d: int) -> CyRow:
        return self.rows[d - 1]


def threefold_report(model: CIModel, max_degree: int) -> QuinticReport:
    """Run the full pipeline for a Calabi-Yau threefold (n - m = 3)."""
    _require_calabi_yau(model)
    if model.n - model.m != 3:
        raise ClassificationError(f"not a threefold: n - m != 3 for {model}")
    lambdas = solve_lambdas_up_to(model, max_degree)
    rows = []
    for d in range(1, max_degree + 1):
        corr = cy_correlator(model, d, lambdas)
        n_d = one_point_invariant(corr, 0, 1)
        m_d = one_point_invariant(corr, 1, 0)
        rows.append(CyRow(degree=d, lam=lambdas[d], n_d=n_d, m_d=m_d))
    counts = aspinwall_morrison({row.degree: row.physical_count for row in rows})
    return QuinticReport(model=model, rows=tuple(rows), immersed_counts=counts)


def quintic_report(max_degree: int) -> QuinticReport:
    """The quintic threefold pipeline up to the given degree."""
    return threefold_report(classify(4, (5,)), max_degree)

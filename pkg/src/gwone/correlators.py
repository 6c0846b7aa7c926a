"""Closed-form one-point correlators for projective space and Fano targets.

The central object is the Laurent polynomial

    phi_d(t, h) = prod_i prod_{k=0}^{d*l_i} (l_i*h + k*t) / prod_{k=1}^d (h + k*t)^{n+1}

attached to a complete intersection of type (l_1, ..., l_m) in P^n.  For
Fano targets of index >= 2 the degree-d one-point correlator equals phi_d
on the nose; for index one it acquires an explicit finite correction sum.
Individual invariants are read off as rationals from the t^{-2-a}
coefficient paired against powers of the hyperplane class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .laurent import LaurentPoly
from .rings import CohClass, RingSpec


class Classification(enum.Enum):
    FANO_INDEX_GE2 = "fano-index-ge2"
    FANO_INDEX_ONE = "fano-index-one"
    CALABI_YAU = "calabi-yau"
    GENERAL_TYPE = "general-type"


class ClassificationError(ValueError):
    """A correlator formula was requested for the wrong positivity class."""


@dataclass(frozen=True)
class CIModel:
    """A complete intersection of type ``degrees`` in P^n (m = 0 is P^n)."""

    n: int
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def degree_product(self) -> int:
        out = 1
        for l in self.degrees:
            out *= l
        return out

    @property
    def factorial_product(self) -> int:
        out = 1
        for l in self.degrees:
            out *= factorial(l)
        return out

    @property
    def classification(self) -> Classification:
        s = self.total_degree
        if s < self.n:
            return Classification.FANO_INDEX_GE2
        if s == self.n:
            return Classification.FANO_INDEX_ONE
        if s == self.n + 1:
            return Classification.CALABI_YAU
        return Classification.GENERAL_TYPE

    @property
    def spec(self) -> RingSpec:
        return RingSpec.absolute(self.n)

    def correlator_weight(self, d: int) -> int:
        """Total (h,t)-degree of the degree-d correlator terms."""
        return self.m + d * (self.total_degree - self.n - 1)

    def __str__(self) -> str:
        if not self.degrees:
            return f"P^{self.n}"
        return f"({','.join(map(str, self.degrees))}) in P^{self.n}"


def classify(n: int, degrees: tuple[int, ...] | list[int] = ()) -> CIModel:
    """Build a model and classify it by the total degree versus n."""
    if n < 1:
        raise ValueError("ambient dimension must be >= 1")
    degs = tuple(int(l) for l in degrees)
    if any(l < 1 for l in degs):
        raise ValueError("all degrees must be >= 1")
    return CIModel(n=n, degrees=degs)


def linear_term(spec: RingSpec, h_coeff: Fraction | int, t_coeff: Fraction | int) -> LaurentPoly:
    """The Laurent polynomial a*h + b*t."""
    return LaurentPoly(
        spec,
        {
            0: CohClass.h_power(spec, 1) * Fraction(h_coeff),
            1: CohClass.scalar(spec, t_coeff),
        },
    )


@lru_cache(maxsize=None)
def phi(model: CIModel, d: int) -> LaurentPoly:
    """The degree-d hypergeometric Laurent polynomial of the model.

    For d = 0 the products are empty apart from the k = 0 factors, leaving
    (prod l_i) * h^m, the class of the complete intersection itself.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    spec = model.spec
    numerator = LaurentPoly.one(spec)
    for l in model.degrees:
        for k in range(d * l + 1):
            numerator = numerator * linear_term(spec, l, k)
    if d == 0:
        return numerator
    denominator = LaurentPoly.one(spec)
    for k in range(1, d + 1):
        denominator = denominator * linear_term(spec, 1, k) ** (model.n + 1)
    return numerator * denominator.inverse()


@lru_cache(maxsize=None)
def pn_one_point(n: int, d: int) -> LaurentPoly:
    """One-point correlator of P^n itself: 1 / prod_{k=1}^d (h + k*t)^{n+1}.

    Computed factor by factor (each linear term inverted on its own), which
    keeps the code path independent from :func:`phi`.
    """
    spec = RingSpec.absolute(n)
    out = LaurentPoly.one(spec)
    for k in range(1, d + 1):
        out = out * linear_term(spec, 1, k).inverse() ** (n + 1)
    return out


def fano_ge2_correlator(model: CIModel, d: int) -> LaurentPoly:
    """Degree-d correlator for Fano models of index two or more: phi_d."""
    if model.classification is not Classification.FANO_INDEX_GE2:
        raise ClassificationError(
            f"not Fano of index >= 2: l_1+...+l_m >= n for {model}"
        )
    return phi(model, d)


def fano_index1_correlator(model: CIModel, d: int) -> LaurentPoly:
    """Degree-d correlator for Fano models of index one.

    The value is the finite sum over r of (-prod l_i!)^r phi_{d-r} / (r! t^r);
    the r = 0 term alone gives the d = 0 convention phi_0.
    """
    if model.classification is not Classification.FANO_INDEX_ONE:
        raise ClassificationError(f"not Fano of index one: l_1+...+l_m != n for {model}")
    spec = model.spec
    sign_factor = -model.factorial_product
    out = LaurentPoly.zero(spec)
    for r in range(d + 1):
        weight = Fraction(sign_factor**r, factorial(r))
        out = out + phi(model, d - r).shift_t(-r) * weight
    return out


def one_point_invariant(correlator: LaurentPoly, a: int, b: int) -> Fraction | CohClass:
    """The invariant with one cotangent power a and hyperplane power b.

    Reads the t^{-2-a} coefficient of the correlator, multiplies by h^b and
    integrates over the fiber.  Missing exponents give zero.
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be >= 0")
    cls = correlator.coefficient(-2 - a)
    return (CohClass.h_power(correlator.spec, b) * cls).integrate()

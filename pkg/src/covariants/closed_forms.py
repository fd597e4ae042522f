"""Exact closed forms for the graded degree of the covariant algebra and
the companion integral identities.

For a binary form of degree d the leading Laurent coefficient of the
Poincare series at z = 1 is

    deg = (1/d!) sum_{0 <= j < d/2} (-1)^j C(d,j) (d/2 - j)^{d-1}

and the next coefficient is half of it.  The half-integer powers are kept
exact as (d-2j)^{d-1} / 2^{d-1}.  c_constant strips the 1/d! so the
integral representation

    c_d = (2/pi) (d-1)! * integral_0^inf (sin x / x)^d dx

has an integer-friendly left side.  wolstenholme_integral evaluates the
classical closed form for integral_0^inf sin^p x / x^s dx (p - s even) as
an exact multiple of pi; pi itself stays symbolic in PiMultiple.

deg_invariants applies the classical closed form for the degree constant
of the invariant subalgebra, valid for d >= 3.  It is deliberately
quarantined: no oracle here cross-checks it and no equivalence with any
particular grading normalization is claimed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "PiMultiple",
    "DegreePair",
    "c_constant",
    "deg_covariants",
    "psi_covariants",
    "degree_pair",
    "deg_invariants",
    "wolstenholme_integral",
]


@dataclass(frozen=True)
class PiMultiple:
    """An exact rational multiple of pi."""

    coefficient: Fraction

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi

    def __str__(self) -> str:
        return f"({self.coefficient})*pi"


def _check_degree(d: int) -> None:
    if d < 1:
        raise ValueError("form degree must be positive")


def c_constant(d: int) -> Fraction:
    """sum_{0 <= j < d/2} (-1)^j C(d,j) (d/2 - j)^{d-1}, exact."""
    _check_degree(d)
    total = Fraction(0)
    for j in range(0, (d + 1) // 2):
        if 2 * j >= d:
            break
        total += (-1) ** j * comb(d, j) * Fraction((d - 2 * j) ** (d - 1), 2 ** (d - 1))
    return total


def deg_covariants(d: int) -> Fraction:
    """Degree of the covariant algebra: c_constant(d) / d!."""
    return c_constant(d) / factorial(d)


def psi_covariants(d: int) -> Fraction:
    """Second Laurent coefficient, half the degree.

    The formula value is returned for every d >= 1; at d = 1 the actual
    expansion of 1/(1-z) has no second term, so callers treat d = 1 as
    degenerate (the engine's verification report flags it).
    """
    return deg_covariants(d) / 2


@dataclass(frozen=True)
class DegreePair:
    """Degree and half-degree of the covariant algebra for one d."""

    d: int
    degree: Fraction
    psi: Fraction


def degree_pair(d: int) -> DegreePair:
    degree = deg_covariants(d)
    return DegreePair(d, degree, degree / 2)


def deg_invariants(d: int) -> Fraction:
    """Closed-form degree constant of the invariant subalgebra, d >= 3.

    Prefactor -1/(4*d!) for odd d and -1/(2*d!) for even d, applied to the
    alternating sum with exponent d - 3.  Applied verbatim; see module
    docstring for the quarantine note.
    """
    if d < 3:
        raise ValueError("closed form needs d >= 3 (exponent d-3 must be non-negative)")
    prefactor = Fraction(-1, (4 if d % 2 else 2) * factorial(d))
    total = Fraction(0)
    for e in range(0, (d + 1) // 2):
        if 2 * e >= d:
            break
        total += (-1) ** e * comb(d, e) * Fraction((d - 2 * e) ** (d - 3), 2 ** (d - 3))
    return prefactor * total


def wolstenholme_integral(p: int, s: int) -> PiMultiple:
    """integral_0^inf sin^p x / x^s dx for p >= s >= 1 with p - s even:

        ((-1)^{(p-s)/2} / (s-1)!) * (pi / 2^p)
            * sum_{j : p-2j > 0} (-1)^j C(p,j) (p-2j)^{s-1}.

    Returned as an exact PiMultiple; (p, s) = (1, 1) needs no special case,
    the sum collapses to pi/2 on its own.
    """
    if p < 1 or s < 1:
        raise ValueError("exponents must be positive")
    if p < s:
        raise ValueError("the integral needs p >= s")
    if (p - s) % 2:
        raise ValueError("closed form requires p - s even")
    total = 0
    for j in range(0, (p + 1) // 2):
        if p - 2 * j <= 0:
            break
        total += (-1) ** j * comb(p, j) * (p - 2 * j) ** (s - 1)
    coeff = Fraction((-1) ** ((p - s) // 2), factorial(s - 1)) * Fraction(total, 2**p)
    return PiMultiple(coeff)

"""Series multisection: the averaging operator over n-th roots of unity.

On functions the operator is determined on z^n by

    (phi_n f)(z^n) = (1/n) sum_{j=0..n-1} f(zeta_n^j z),   zeta_n = e^{2 pi i / n},

which on power series just keeps the coefficients whose exponent is a
multiple of n and reindexes them.  We implement the operator exactly on
series only; exact rational-function images are recovered downstream by
reconstruction, which avoids cyclotomic arithmetic entirely.

The Laurent heads of phi_n(1/(1-z)^h) at z = 1 are known in closed form:
the leading coefficient (of (1-z)^{-h}) is n^{h-1} and, for h >= 2, the
next one is -h(n-1)n^{h-2}/2.  The h = 1 image is exactly 1/(1-z) again,
so there the second coefficient is 0; alpha_head returns the closed-form
pair and documents that boundary.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import NamedTuple

from .exact import RationalFunction, TruncatedSeries

__all__ = ["multisect", "AlphaHead", "alpha_head", "roots_of_unity_check"]


class AlphaHead(NamedTuple):
    n: int
    h: int
    alpha_h: Fraction
    alpha_h_minus_1: Fraction


def multisect(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Keep coefficients with exponent divisible by n; output order is
    floor(order(f)/n) and output coefficient k is input coefficient n*k."""
    if n < 1:
        raise ValueError("multisection stride must be positive")
    return TruncatedSeries([f.coefficient(n * k) for k in range(f.order // n + 1)])


def alpha_head(n: int, h: int) -> AlphaHead:
    """Closed-form first two Laurent coefficients of phi_n(1/(1-z)^h) at z=1.

    Valid for h >= 2 and, trivially, for n = 1.  At h = 1 with n >= 2 the
    true second coefficient is 0 while this formula pair reports
    -(n-1)/(2n); callers comparing against actual expansions must treat
    that cell separately.
    """
    if n < 1 or h < 1:
        raise ValueError("n and h must be positive")
    lead = Fraction(n) ** (h - 1)
    sub = -Fraction(h * (n - 1), 2) * Fraction(n) ** (h - 2)
    return AlphaHead(n, h, lead, sub)


def roots_of_unity_check(f: RationalFunction, n: int, sample: float) -> float:
    """Absolute gap between the two sides of the defining average.

    Evaluates (1/n) sum_j f(zeta_n^j * sample) in complex double precision
    and compares with the multisected series of f summed at sample^n.  The
    series side uses enough exact coefficients for the geometric tail at
    |sample| < 1 to be negligible at double precision.
    """
    if n < 1:
        raise ValueError("multisection stride must be positive")
    if not 0.0 < sample < 1.0:
        raise ValueError("sample must lie in (0, 1)")
    total = 0j
    for j in range(n):
        z = sample * cmath.exp(2j * cmath.pi * j / n)
        den = f.denominator.eval_complex(z)
        if abs(den) < 1e-13:
            raise ZeroDivisionError(f"sample rotation hits a pole near {z}")
        total += f.numerator.eval_complex(z) / den
    average = total / n

    order = 400
    phi = multisect(f.series(order), n)
    w = sample**n
    acc = 0.0
    power = 1.0
    for c in phi.coeffs:
        acc += float(c) * power
        power *= w
    return abs(average - acc)

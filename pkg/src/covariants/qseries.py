"""The q-Pochhammer products and per-j terms of the covariant series.

The Poincare series of the covariant algebra of a binary d-form is a sum
of multisections of the terms

    T_j(z) = (-1)^j z^{j(j+1)} (1+z) / ((z^2;z^2)_j (z^2;z^2)_{d-j}),

one for each j with 0 <= j < d/2, where (z^2;z^2)_j is the q-shifted
factorial (1-z^2)(1-z^4)...(1-z^{2j}).  Besides the exact series
expansions, this module carries the closed-form heads of the local
expansions at z = 1:

  * (z^2;z^2)_j = 2^j j! (1-z)^j - 2^{j-1} j! j^2 (1-z)^{j+1} + ...
  * T_j = L/(1-z)^d + L (d+1)(d/2 - j - 1/2)/(1-z)^{d-1} + ...
    with L = (-1)^j / (2^{d-1} j! (d-j)!).

The subleading Pochhammer coefficient is defined as 0 for j = 0 (the
empty product is the constant 1).  For d = 1 the term head formula gives
subleading 0, consistent with T_0 = 1/(1-z) having no regular part.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import Polynomial, RationalFunction, TruncatedSeries

__all__ = [
    "q_pochhammer",
    "term_numerator",
    "term_denominator",
    "term_rational",
    "term_series",
    "pochhammer_head_at_one",
    "term_laurent_head",
]


def _check_term(d: int, j: int) -> None:
    if d < 1:
        raise ValueError("form degree must be positive")
    if not 0 <= 2 * j < d:
        raise ValueError(f"term index j={j} outside [0, {d}/2)")


def q_pochhammer(j: int) -> Polynomial:
    """(z^2; z^2)_j = product_{k=1..j} (1 - z^{2k}); the empty product is 1.

    Degree j(j+1), constant term 1, leading coefficient (-1)^j.
    """
    if j < 0:
        raise ValueError("negative index")
    p = Polynomial.one()
    for k in range(1, j + 1):
        p = p * Polynomial([1] + [0] * (2 * k - 1) + [-1])
    return p


def term_numerator(d: int, j: int) -> Polynomial:
    _check_term(d, j)
    sign = -1 if j % 2 else 1
    return Polynomial.monomial(j * (j + 1), sign) * Polynomial([1, 1])


def term_denominator(d: int, j: int) -> Polynomial:
    _check_term(d, j)
    return q_pochhammer(j) * q_pochhammer(d - j)


def term_rational(d: int, j: int) -> RationalFunction:
    """T_j as a reduced rational function."""
    return RationalFunction(term_numerator(d, j), term_denominator(d, j))


def term_series(d: int, j: int, order: int) -> TruncatedSeries:
    """Exact expansion of T_j; coefficients are integers (signed partition
    counts), never computed through floating intermediates."""
    _check_term(d, j)
    den = TruncatedSeries.from_polynomial(term_denominator(d, j), order)
    return den.invert() * term_numerator(d, j)


def pochhammer_head_at_one(j: int) -> tuple[Fraction, Fraction]:
    """Coefficients of (1-z)^j and (1-z)^{j+1} in (z^2;z^2)_j at z = 1."""
    if j < 0:
        raise ValueError("negative index")
    leading = Fraction(2**j * factorial(j))
    if j == 0:
        return leading, Fraction(0)
    return leading, Fraction(-(2 ** (j - 1)) * factorial(j) * j * j)


def term_laurent_head(d: int, j: int) -> tuple[Fraction, Fraction]:
    """Coefficients of (1-z)^{-d} and (1-z)^{-(d-1)} in T_j at z = 1."""
    _check_term(d, j)
    sign = -1 if j % 2 else 1
    lead = Fraction(sign, 2 ** (d - 1) * factorial(j) * factorial(d - j))
    sub = lead * (d + 1) * (Fraction(d, 2) - j - Fraction(1, 2))
    return lead, sub

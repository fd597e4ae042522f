from fractions import Fraction
from math import factorial

import pytest

from covariants.engine import laurent_at_one, reconstruct_rational
from covariants.exact import Polynomial
from covariants.qseries import (
    pochhammer_head_at_one,
    q_pochhammer,
    term_laurent_head,
    term_rational,
    term_series,
)


def test_pochhammer_small_cases():
    assert q_pochhammer(0) == Polynomial.one()
    assert q_pochhammer(1) == Polynomial([1, 0, -1])
    assert q_pochhammer(2) == Polynomial([1, 0, -1, 0, -1, 0, 1])


def test_pochhammer_degree_and_leading_sign():
    for j in range(13):
        f = q_pochhammer(j)
        assert f.degree == j * (j + 1)
        assert f.coefficient(f.degree) == (-1) ** j
        assert f.coefficient(0) == 1


def test_pochhammer_j3_leading_term():
    f = q_pochhammer(3)
    assert f.degree == 12
    assert f.coefficient(12) == -1


def test_term_series_linear_form():
    assert term_series(1, 0, 5).coeffs == (1, 1, 1, 1, 1, 1)


def test_term_series_quadratic_form():
    assert term_series(2, 0, 8).coeffs == (1, 1, 1, 1, 2, 2, 2, 2, 3)


def test_term_series_cubic_j1():
    assert term_series(3, 1, 3).coeffs == (0, 0, -1, -1)


def test_term_series_coefficients_are_integers():
    for d in range(1, 13):
        for j in range((d + 1) // 2):
            if 2 * j >= d:
                break
            for c in term_series(d, j, 60).coeffs:
                assert c.denominator == 1, (d, j, c)


def test_term_rational_matches_series():
    for d in range(1, 9):
        for j in range((d + 1) // 2):
            if 2 * j >= d:
                break
            assert term_rational(d, j).series(40) == term_series(d, j, 40)


def test_term_index_out_of_range():
    with pytest.raises(ValueError):
        term_series(2, 1, 5)
    with pytest.raises(ValueError):
        term_series(4, 2, 5)
    with pytest.raises(ValueError):
        term_series(3, -1, 5)


def test_pochhammer_head_examples():
    assert pochhammer_head_at_one(0) == (1, 0)
    assert pochhammer_head_at_one(1) == (2, -1)
    assert pochhammer_head_at_one(2) == (8, -16)


def test_pochhammer_head_matches_shifted_expansion():
    # the first two coefficients in powers of u = 1-z are the claimed
    # closed forms 2^j j! and -2^{j-1} j! j^2
    for j in range(13):
        shifted = q_pochhammer(j).compose_one_minus()
        lead, sub = pochhammer_head_at_one(j)
        assert shifted.coefficient(j) == lead == 2**j * factorial(j)
        next_coeff = shifted.coefficient(j + 1) if shifted.degree > j else Fraction(0)
        assert next_coeff == sub
        for i in range(j):
            assert shifted.coefficient(i) == 0


def test_term_laurent_head_examples():
    assert term_laurent_head(2, 0) == (Fraction(1, 4), Fraction(3, 8))
    assert term_laurent_head(3, 1) == (Fraction(-1, 8), Fraction(0))
    assert term_laurent_head(1, 0) == (Fraction(1), Fraction(0))


def test_term_laurent_head_closed_form():
    for d in range(1, 9):
        for j in range((d + 1) // 2):
            if 2 * j >= d:
                break
            lead, sub = term_laurent_head(d, j)
            expected_lead = Fraction((-1) ** j, 2 ** (d - 1) * factorial(j) * factorial(d - j))
            assert lead == expected_lead
            assert sub == lead * (d + 1) * (Fraction(d, 2) - j - Fraction(1, 2))


def test_term_heads_against_reconstruction():
    # reconstruct each term from its series, then read the two leading
    # coefficients at z = 1 directly off the Laurent expansion
    for d in range(1, 9):
        for j in range((d + 1) // 2):
            if 2 * j >= d:
                break
            direct = term_rational(d, j)
            bound = max(direct.numerator.degree, direct.denominator.degree)
            series = term_series(d, j, 2 * bound + 10)
            rebuilt = reconstruct_rational(series, bound, bound, 10)
            assert rebuilt == direct

            head = laurent_at_one(rebuilt, 2)
            lead, sub = term_laurent_head(d, j)
            assert head.pole_order == d
            assert head.coefficients[0] == lead
            assert head.coefficients[1] == sub


def test_term_head_via_pole_clearing():
    # multiply by (1-z)^d and evaluate at 1: the pole clears and the value
    # is the leading head coefficient
    for d in range(1, 9):
        for j in range((d + 1) // 2):
            if 2 * j >= d:
                break
            cleared = term_rational(d, j) * Polynomial([1, -1]) ** d
            assert cleared(1) == term_laurent_head(d, j)[0]

from fractions import Fraction
from math import factorial

import pytest

from covariants.closed_forms import deg_covariants, psi_covariants
from covariants.engine import (
    ReconstructionError,
    covariant_series,
    gorenstein_check,
    laurent_at_one,
    poincare_series,
    reconstruct_rational,
)
from covariants.exact import Polynomial, RationalFunction, TruncatedSeries

# reduced numerator/denominator degrees of the reconstructed series,
# pinned as a regression guard on the gcd reduction
REDUCED_DEGREES = {
    1: (0, 1),
    2: (0, 3),
    3: (2, 6),
    4: (2, 7),
    5: (14, 20),
    6: (10, 17),
    7: (34, 42),
    8: (18, 27),
    9: (62, 72),
    10: (36, 47),
}


def geometric(order):
    return TruncatedSeries([1] * (order + 1))


class TestCovariantSeries:
    def test_linear_form(self):
        assert covariant_series(1, 6).coeffs == (1,) * 7

    def test_quadratic_form(self):
        assert covariant_series(2, 5).coeffs == (1, 1, 2, 2, 3, 3)

    def test_cubic_form(self):
        assert covariant_series(3, 4).coeffs == (1, 1, 2, 3, 5)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            covariant_series(0, 5)
        with pytest.raises(ValueError):
            covariant_series(2, -1)

    def test_constant_coefficient_is_one(self):
        for d in range(1, 9):
            assert covariant_series(d, 0).coefficient(0) == 1


class TestReconstruct:
    def test_geometric(self):
        f = reconstruct_rational(geometric(20), 0, 1, guard=5)
        assert f == RationalFunction(Polynomial.one(), Polynomial([1, -1]))

    def test_quadratic_series(self):
        series = covariant_series(2, 13)
        f = reconstruct_rational(series, 0, 3, guard=10)
        assert f.numerator == Polynomial.one()
        assert f.denominator == Polynomial([1, -1, -1, 1])

    def test_factorial_series_fails_guards(self):
        series = TruncatedSeries([factorial(i) for i in range(40)])
        for num_bound in (2, 5, 8):
            for den_bound in (2, 5, 8):
                with pytest.raises(ReconstructionError):
                    reconstruct_rational(series, num_bound, den_bound, guard=10)

    def test_requires_enough_terms(self):
        with pytest.raises(ValueError):
            reconstruct_rational(geometric(5), 2, 3, guard=4)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            reconstruct_rational(geometric(20), -1, 3)
        with pytest.raises(ValueError):
            reconstruct_rational(geometric(20), 0, 0)


class TestPoincareSeries:
    def test_reduced_degrees(self):
        for d, (num_deg, den_deg) in REDUCED_DEGREES.items():
            f = poincare_series(d)
            assert (f.numerator.degree, f.denominator.degree) == (num_deg, den_deg), d

    def test_fidelity(self):
        # the reconstructed function reproduces the series far beyond the
        # window it was solved from
        for d in range(1, 11):
            f = poincare_series(d)
            assert f.series(60) == covariant_series(d, 60), d

    def test_degenerate_linear_form(self):
        f = poincare_series(1)
        assert f == RationalFunction(Polynomial.one(), Polynomial([1, -1]))


class TestLaurentAtOne:
    def test_simple_pole(self):
        f = RationalFunction(Polynomial.one(), Polynomial([1, -1]))
        head = laurent_at_one(f, 1)
        assert head.pole_order == 1
        assert head.coefficients == (1,)

    def test_double_pole(self):
        f = RationalFunction(Polynomial.one(), Polynomial([1, -1]) * Polynomial([1, 0, -1]))
        head = laurent_at_one(f, 2)
        assert head.pole_order == 2
        assert head.coefficients == (Fraction(1, 2), Fraction(1, 4))

    def test_triple_pole(self):
        num = Polynomial([1, 0, 0, 1])
        den = Polynomial([1, -1]) * Polynomial([1, 0, -1]) * Polynomial([1, 0, 0, 0, -1])
        head = laurent_at_one(RationalFunction(num, den), 2)
        assert head.pole_order == 3
        assert head.coefficients == (Fraction(1, 4), Fraction(1, 8))

    def test_no_pole_raises(self):
        f = RationalFunction(Polynomial.one(), Polynomial([1, Fraction(-1, 2)]))
        with pytest.raises(ValueError):
            laurent_at_one(f, 2)

    def test_consistency_with_closed_forms(self):
        for d in range(2, 11):
            head = laurent_at_one(poincare_series(d), 2)
            assert head.pole_order == d
            assert head.coefficients[0] == deg_covariants(d)
            assert head.coefficients[1] == psi_covariants(d)

    def test_longer_expansion_matches_series_identity(self):
        # sanity on deeper coefficients: resumming the Laurent heads of
        # 1/((1-z)(1-z^2)) at z = 1/2 approaches the true value
        f = RationalFunction(Polynomial.one(), Polynomial([1, -1]) * Polynomial([1, 0, -1]))
        head = laurent_at_one(f, 8)
        u = Fraction(1, 2)
        resummed = sum(
            c * u ** (i - head.pole_order) for i, c in enumerate(head.coefficients)
        )
        assert abs(resummed - f(Fraction(1, 2))) < Fraction(1, 100)


class TestGorenstein:
    def test_quadratic(self):
        f = RationalFunction(Polynomial.one(), Polynomial([1, -1]) * Polynomial([1, 0, -1]))
        report = gorenstein_check(f, 2)
        assert report.equation_holds and report.q == 3 == report.expected_q
        assert not report.degenerate

    def test_cubic(self):
        num = Polynomial([1, 0, 0, 1])
        den = Polynomial([1, -1]) * Polynomial([1, 0, -1]) * Polynomial([1, 0, 0, 0, -1])
        report = gorenstein_check(RationalFunction(num, den), 3)
        assert report.equation_holds and report.q == 4 == report.expected_q

    def test_linear_form_degenerate(self):
        report = gorenstein_check(poincare_series(1), 1)
        assert report.equation_holds
        assert report.q == 1
        assert report.expected_q == 2
        assert report.degenerate

    def test_holds_through_d10(self):
        for d in range(2, 11):
            report = gorenstein_check(poincare_series(d), d)
            assert report.equation_holds and report.q == d + 1, d

    def test_functional_equation_numerically(self):
        # spot check P(1/z) = (-1)^d z^(d+1) P(z) at a rational point
        for d in (2, 3, 4):
            f = poincare_series(d)
            z = Fraction(1, 3)
            assert f(1 / z) == (-1) ** d * z ** (d + 1) * f(z)


def test_popov_degree_gap_relation():
    # the degree gap equals twice the psi/deg ratio plus d
    for d in range(2, 11):
        f = poincare_series(d)
        q = f.denominator.degree - f.numerator.degree
        assert 2 * psi_covariants(d) / deg_covariants(d) == q - d

"""Assembly of the covariant Poincare series and its exact reconstruction.

covariant_series sums the multisected term family: coefficient i of the
series counts degree-i covariants and is cross-checked against the
partition oracle in the tests.  reconstruct_rational recovers the series
as an exact rational function by solving a Pade-style linear system over
the rationals and validating guard coefficients beyond the solve window.
laurent_at_one rewrites a rational function around z = 1 and exposes the
pole order and leading Laurent coefficients, which for the Poincare
series are the degree and half-degree of the algebra.  gorenstein_check
verifies the functional equation P(1/z) = (-1)^d z^q P(z) by exact
polynomial algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Polynomial, RationalFunction, TruncatedSeries
from .multisection import multisect
from .qseries import term_denominator, term_series

__all__ = [
    "ReconstructionError",
    "LaurentHead",
    "GorensteinReport",
    "covariant_series",
    "reconstruct_rational",
    "poincare_series",
    "laurent_at_one",
    "gorenstein_check",
]

DEFAULT_GUARD = 10


class ReconstructionError(RuntimeError):
    """No rational function within the degree bounds matches the series."""


@dataclass(frozen=True)
class LaurentHead:
    """Expansion f = sum_i coefficients[i] * (1-z)^{-(pole_order - i)}."""

    pole_order: int
    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class GorensteinReport:
    d: int
    q: int
    expected_q: int
    equation_holds: bool
    degenerate: bool


def covariant_series(d: int, order: int) -> TruncatedSeries:
    """Exact dimensions of the graded pieces of the covariant algebra,
    through the given order.

    Each term T_j is expanded to order*(d-2j) so its stride-(d-2j)
    multisection is exact through the requested order; the terms are then
    summed coefficientwise.
    """
    if d < 1:
        raise ValueError("form degree must be positive")
    if order < 0:
        raise ValueError("negative order")
    total = TruncatedSeries([0] * (order + 1))
    for j in range(0, (d + 1) // 2):
        if 2 * j >= d:
            break
        stride = d - 2 * j
        total = total + multisect(term_series(d, j, order * stride), stride)
    return total


def _solve_fraction_system(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Fraction.  Returns one solution (free unknowns set
    to 0) or None when the system is inconsistent."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        row_r = aug[r]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], row_r)]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if aug[i][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for i, c in enumerate(pivot_cols):
        solution[c] = aug[i][n_cols]
    return solution


def reconstruct_rational(
    f: TruncatedSeries, num_bound: int, den_bound: int, guard: int = DEFAULT_GUARD
) -> RationalFunction:
    """Recover A/B with deg A <= num_bound, deg B <= den_bound, B(0) = 1 from
    the series f, demanding that the product B*f has zero coefficients not
    only across the solve window but across `guard` further guard positions.

    The guard is what separates genuine rational series from accidental
    solves: a non-rational input (factorially growing coefficients, say)
    admits a window solution yet fails its guards.
    """
    if num_bound < 0 or den_bound < 1 or guard < 0:
        raise ValueError("bounds must satisfy num_bound >= 0, den_bound >= 1, guard >= 0")
    need = num_bound + den_bound + guard
    if f.order < need:
        raise ValueError(f"series order {f.order} below required {need}")
    a = f.coeffs

    def coeff(k: int) -> Fraction:
        return a[k] if k >= 0 else Fraction(0)

    rows = [
        [coeff(num_bound + r - m) for m in range(1, den_bound + 1)]
        for r in range(1, den_bound + 1)
    ]
    rhs = [-a[num_bound + r] for r in range(1, den_bound + 1)]
    solution = _solve_fraction_system(rows, rhs)
    if solution is None:
        raise ReconstructionError(
            f"no denominator of degree <= {den_bound} matches the solve window"
        )
    den = Polynomial([Fraction(1)] + solution)
    product = f * den
    if any(product.coefficient(k) for k in range(num_bound + 1, need + 1)):
        raise ReconstructionError(
            f"guard coefficients disagree within bounds ({num_bound}, {den_bound})"
        )
    num = Polynomial(product.coeffs[: num_bound + 1])
    return RationalFunction(num, den)


def _denominator_degree_cap(d: int) -> int:
    return sum(j * (j + 1) + (d - j) * (d - j + 1) for j in range(0, (d + 1) // 2) if 2 * j < d)


@lru_cache(maxsize=None)
def poincare_series(d: int, guard: int = DEFAULT_GUARD) -> RationalFunction:
    """The covariant Poincare series as an exact rational function.

    Bound schedule: the denominator bound starts at d(d+1)/2 + d and
    doubles on failure up to the provable cap from clearing every term
    denominator under multisection.  The numerator bound is den_bound
    minus (d+1), widened by 2 on retries, so the expected degree gap
    q = d+1 is observed rather than assumed.
    """
    if d < 1:
        raise ValueError("form degree must be positive")
    cap = _denominator_degree_cap(d)
    den_bound = d * (d + 1) // 2 + d
    attempt = 0
    while True:
        num_bound = max(den_bound - (d + 1) + (2 if attempt else 0), 0)
        series = covariant_series(d, num_bound + den_bound + guard)
        try:
            return reconstruct_rational(series, num_bound, den_bound, guard)
        except ReconstructionError:
            if den_bound >= cap:
                raise
            den_bound = min(2 * den_bound, cap)
            attempt += 1


def laurent_at_one(f: RationalFunction, terms: int) -> LaurentHead:
    """Expand f around z = 1: substitute z = 1 - u and peel off the pole.

    Writes f = u^{-p} * (regular series in u) and returns the pole order p
    together with the first `terms` coefficients of the regular series,
    all exact.
    """
    if terms < 1:
        raise ValueError("need at least one coefficient")
    num_u = f.numerator.compose_one_minus()
    den_u = f.denominator.compose_one_minus()
    val_den = next((i for i, c in enumerate(den_u.coeffs) if c), None)
    if val_den is None:  # pragma: no cover - denominator is nonzero by invariant
        raise ValueError("zero denominator")
    val_num = next((i for i, c in enumerate(num_u.coeffs) if c), 0)
    pole = val_den - val_num
    if pole <= 0:
        raise ValueError("no pole at z = 1")
    den_reg = TruncatedSeries(
        [den_u.coeffs[val_den + i] if val_den + i <= den_u.degree else Fraction(0)
         for i in range(terms)]
    )
    num_reg = TruncatedSeries(
        [num_u.coeffs[val_num + i] if val_num + i <= num_u.degree else Fraction(0)
         for i in range(terms)]
    )
    expansion = num_reg * den_reg.invert()
    return LaurentHead(pole, expansion.coeffs)


def gorenstein_check(f: RationalFunction, d: int) -> GorensteinReport:
    """Verify P(1/z) = (-1)^d z^q P(z) exactly, q = deg den - deg num.

    Clearing denominators, the identity is rev(A)*B = (-1)^d A*rev(B)
    where rev is coefficient reversal.  d = 1 is flagged degenerate: the
    identity holds there but with q = 1 instead of d + 1.
    """
    if d < 1:
        raise ValueError("form degree must be positive")
    num, den = f.numerator, f.denominator
    q = den.degree - num.degree
    lhs = num.reciprocal() * den
    rhs = num * den.reciprocal()
    if d % 2:
        rhs = -rhs
    return GorensteinReport(
        d=d,
        q=q,
        expected_q=d + 1,
        equation_holds=(lhs == rhs),
        degenerate=(d == 1),
    )

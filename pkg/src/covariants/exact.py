"""Exact arithmetic substrate: dense polynomials, truncated power series,
and reduced rational functions over the rationals.

Coefficients are fractions.Fraction throughout and every operation is
exact; nothing here ever rounds.  A Polynomial stores a dense coefficient
tuple indexed by exponent with trailing zeros trimmed (the zero polynomial
keeps an empty tuple and reports degree -1).  A TruncatedSeries of order N
stores exactly N + 1 coefficients, each the true series coefficient.  A
RationalFunction is kept gcd-reduced with denominator constant term 1,
the natural normalization here since every generating function in this
project has value 1 at z = 0.

Serialization: a rational is the string "p/q" ("p" when the denominator
is 1, exactly what str(Fraction) produces); polynomials and series
serialize as lists of such strings, index = exponent.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction

__all__ = [
    "Polynomial",
    "TruncatedSeries",
    "RationalFunction",
    "poly_gcd",
    "poly_divmod",
]


def _as_rat(x: object) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object] = ()) -> None:
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: object = 1) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self._coeffs or not other._coeffs:
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, x in enumerate(self._coeffs):
                if x:
                    for j, y in enumerate(other._coeffs):
                        if y:
                            out[i + j] += x * y
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: object) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = _as_rat(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * z + float(c)
        return acc

    def reciprocal(self) -> Polynomial:
        """Coefficient reversal: z^deg * p(1/z).  Undefined for zero (returns zero)."""
        return Polynomial(self._coeffs[::-1])

    def compose_one_minus(self) -> Polynomial:
        """Return q with q(u) = p(1 - u)."""
        out = [Fraction(0)] * (len(self._coeffs) or 1)
        power = [Fraction(1)]  # (1 - u)^i, built incrementally
        for c in self._coeffs:
            if c:
                for k, x in enumerate(power):
                    out[k] += c * x
            nxt = [Fraction(0)] * (len(power) + 1)
            for k, x in enumerate(power):
                nxt[k] += x
                nxt[k + 1] -= x
            power = nxt
        return Polynomial(out)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> Polynomial:
        return cls([Fraction(s) for s in items])

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"


class TruncatedSeries:
    """Power series known exactly through a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object]) -> None:
        cs = tuple(_as_rat(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self._coeffs = cs

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedSeries:
        if order < 0:
            raise ValueError("negative order")
        return cls([p.coefficient(i) for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self._coeffs[i]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self._coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
        )

    def __mul__(self, other: object) -> TruncatedSeries:
        if isinstance(other, Polynomial):
            other = TruncatedSeries.from_polynomial(other, self.order)
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i, x in enumerate(self._coeffs[: n + 1]):
                if x:
                    for j, y in enumerate(other._coeffs[: n + 1 - i]):
                        if y:
                            out[i + j] += x * y
            return TruncatedSeries(out)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse to the same order.

        With a = sum a_k z^k, a_0 != 0, the inverse b satisfies b_0 = 1/a_0
        and b_m = -(1/a_0) * sum_{k=1..m} a_k b_{m-k}.
        """
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        nonzero = [(k, c) for k, c in enumerate(a) if k > 0 and c]
        b = [inv0] + [Fraction(0)] * self.order
        for m in range(1, self.order + 1):
            s = Fraction(0)
            for k, c in nonzero:
                if k > m:
                    break
                s += c * b[m - k]
            b[m] = -s * inv0
        return TruncatedSeries(b)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> TruncatedSeries:
        return cls([Fraction(s) for s in items])

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"


def _int_coeffs(p: Polynomial) -> list[int]:
    scale = lcm(*(c.denominator for c in p.coeffs)) if p else 1
    return [int(c * scale) for c in p.coeffs]


def _content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g or 1


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, primitive over the integers, positive leading
    coefficient.  Uses the primitive pseudo-remainder sequence so coefficient
    growth stays bounded for the degree few-hundred inputs reconstruction
    produces."""
    if not a:
        return b
    if not b:
        return a
    A, B = _int_coeffs(a), _int_coeffs(b)
    A = [c // _content(A) for c in A]
    B = [c // _content(B) for c in B]
    if len(A) < len(B):
        A, B = B, A
    while any(B):
        R = list(A)
        lead_b = B[-1]
        deg_b = len(B) - 1
        while True:
            while len(R) > 1 and R[-1] == 0:
                R.pop()
            if len(R) - 1 < deg_b or not any(R):
                break
            shift = len(R) - 1 - deg_b
            lead_r = R[-1]
            R = [lead_b * c for c in R]
            for i, c in enumerate(B):
                R[i + shift] -= lead_r * c
            R.pop()
        A, B = B, R
        if any(B):
            cb = _content(B)
            B = [c // cb for c in B]
        else:
            break
    ca = _content(A)
    A = [c // ca for c in A]
    if A[-1] < 0:
        A = [-c for c in A]
    return Polynomial(A)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division a = q*b + r with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 1)
    r = list(a.coeffs)
    bl = b.coeffs[-1]
    while True:
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) - 1 < b.degree or not any(r):
            break
        shift = len(r) - 1 - b.degree
        f = r[-1] / bl
        q[shift] = f
        for i, c in enumerate(b.coeffs):
            r[i + shift] -= f * c
        r.pop()
    return Polynomial(q), Polynomial(r)


class RationalFunction:
    """Quotient of polynomials, gcd-reduced, denominator constant term 1.

    The normalization makes structural equality meaningful and keeps the
    series expansion division-free at the constant term.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: Polynomial, den: Polynomial) -> None:
        if not isinstance(num, Polynomial) or not isinstance(den, Polynomial):
            raise TypeError("RationalFunction expects Polynomial arguments")
        if not den:
            raise ValueError("zero denominator")
        if den.coefficient(0) == 0:
            raise ValueError("denominator vanishes at 0; all series here start at 1")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, r1 = poly_divmod(num, g)
            den, r2 = poly_divmod(den, g)
            if r1 or r2:  # pragma: no cover - gcd divides both by construction
                raise ArithmeticError("gcd failed to divide exactly")
        c0 = den.coefficient(0)
        self._num = num * (1 / c0)
        self._den = den * (1 / c0)

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __mul__(self, other: object) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return RationalFunction(self._num * other._num, self._den * other._den)
        if isinstance(other, Polynomial):
            return RationalFunction(self._num * other, self._den)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self._num * other, self._den)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x: object) -> Fraction:
        x = _as_rat(x)
        d = self._den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self._num(x) / d

    def eval_complex(self, z: complex) -> complex:
        return self._num.eval_complex(z) / self._den.eval_complex(z)

    def series(self, order: int) -> TruncatedSeries:
        den = TruncatedSeries.from_polynomial(self._den, order)
        return TruncatedSeries.from_polynomial(self._num, order) * den.invert()

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"

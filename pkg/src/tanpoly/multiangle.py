"""Exact evaluation of tan(n*x) from t = tan(x), by three independent routes.

The primary route is the alternating binomial ratio

    tan(nx) = sum_k (-1)^k C(n,2k+1) t^(2k+1) / sum_k (-1)^k C(n,2k) t^(2k).

The two cross-checks are iterated tangent angle addition, carried as a
projective integer pair (p : q) so intermediate poles pass through
cleanly, and powers of the Gaussian integer q + p*i for t = p/q, whose
real and imaginary parts are exactly the alternating sums above scaled by
q^n. A pole is a value, not an error: it occurs exactly when the
denominator sum vanishes. For n = 0 the numerator sum is empty and the
result is 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import GaussianInt, Rational
from .report import VerifyReport, failure
from .triangles import r_coef, t_coef


@dataclass(frozen=True)
class TanValue:
    """A finite rational tangent value, or the pole."""

    value: Rational | None = None

    @property
    def is_pole(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "pole" if self.value is None else str(self.value)


POLE = TanValue()

DEFAULT_GRID: tuple[Rational, ...] = (
    Rational(0),
    Rational(1), Rational(-1),
    Rational(1, 2), Rational(-1, 2),
    Rational(2), Rational(-2),
    Rational(1, 3), Rational(-1, 3),
    Rational(3, 7), Rational(-3, 7),
    Rational(7, 2), Rational(-7, 2),
)

# Skip the float sanity bridge when the denominator is this close to a
# pole; conditioning makes a double-precision comparison meaningless.
FLOAT_SKIP_THRESHOLD = 1e-6


def _alternating_sums(n: int, t: Rational) -> tuple[Rational, Rational]:
    num = Rational(0)
    for k in range((n - 1) // 2 + 1):
        num = num + Rational((-1) ** k * r_coef(n, k)) * t ** (2 * k + 1)
    den = Rational(0)
    for k in range(n // 2 + 1):
        den = den + Rational((-1) ** k * t_coef(n, k)) * t ** (2 * k)
    return num, den


def tan_beeler(n: int, t: Rational) -> TanValue:
    """tan(n * arctan(t)) by the alternating binomial ratio."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num, den = _alternating_sums(n, t)
    if not den:
        return POLE
    return TanValue(num / den)


def tan_addition(n: int, t: Rational) -> TanValue:
    """tan(n * arctan(t)) by iterating the tangent angle-addition formula.

    The running value is a projective pair (p : q) with tan = p/q, updated
    by (p, q) -> (p*b + a*q, q*b - a*p) for t = a/b. The pair never
    collapses to (0, 0) because each step multiplies by a matrix of
    determinant a^2 + b^2 > 0, so poles (q = 0) propagate consistently.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = t.num, t.den
    p, q = 0, 1
    for _ in range(n):
        p, q = p * b + a * q, q * b - a * p
    if q == 0:
        return POLE
    return TanValue(Rational(p, q))


def tan_gaussian(n: int, t: Rational) -> TanValue:
    """tan(n * arctan(t)) from the n-th power of q + p*i, for t = p/q.

    The q^n scale factors cancel in im/re, and re = 0 is exactly the pole
    condition of the binomial ratio.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = GaussianInt(t.den, t.num) ** n
    if g.re == 0:
        return POLE
    return TanValue(Rational(g.im, g.re))


METHODS = {
    "beeler": tan_beeler,
    "addition": tan_addition,
    "gaussian": tan_gaussian,
}


def tan_float_check(n: int, t: Rational) -> float | None:
    """Absolute difference between the exact value (as a double) and
    math.tan(n * math.atan(t)).

    Returns None (not applicable) at a pole or when the exact denominator
    is within FLOAT_SKIP_THRESHOLD of zero after float conversion.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    num, den = _alternating_sums(n, t)
    if not den or abs(float(den)) < FLOAT_SKIP_THRESHOLD:
        return None
    exact = float(num / den)
    approx = math.tan(n * math.atan(float(t)))
    return abs(exact - approx)


def verify_triple_agreement(max_n: int, grid: tuple[Rational, ...] = DEFAULT_GRID) -> VerifyReport:
    """Evaluate all three routes over 0 <= n <= max_n on the grid.

    Agreement is exact equality of TanValue, poles included. Points are
    visited in a fixed (n, t) order so the report is deterministic.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for t in grid:
            by_ratio = tan_beeler(n, t)
            by_addition = tan_addition(n, t)
            by_gaussian = tan_gaussian(n, t)
            checked += 1
            if not (by_ratio == by_addition == by_gaussian):
                failures.append(
                    failure(n=n, t=t, beeler=by_ratio, addition=by_addition, gaussian=by_gaussian)
                )
    return VerifyReport("beeler", checked, tuple(failures))

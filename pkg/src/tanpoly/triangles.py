"""The six exact coefficient triangles.

Two binomial families: R(n, k) = C(n, 2k+1) and T(n, k) = C(n, 2k), the
odd- and even-column halves of Pascal's triangle (A034867 and A034839).
Two factorial-scaled families M and N, the coefficients of the iterated
operator p -> d/dx(sec(x) * p) expanded over tan and sec monomials; they
are computed from their two-term recurrences and, independently, from the
closed forms n! * C(n+1, 2k+1) and n! * C(n+1, 2k). Two reduced families
Rtilde and Ttilde whose rows collect the coefficients of the reduced
polynomial families (A056242 and A210753); those rows are extracted from
the symbolic module rather than tabulated here.

Every accessor returns 0 outside its family's index range, which makes the
recurrences total. Row caches hold immutable tuples and are safe for
concurrent readers.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .report import VerifyReport, failure


def binom(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def r_coef(n: int, k: int) -> int:
    """C(n, 2k+1): numerator coefficient of the tan(nx) expansion."""
    return binom(n, 2 * k + 1)


def t_coef(n: int, k: int) -> int:
    """C(n, 2k): denominator coefficient of the tan(nx) expansion."""
    return binom(n, 2 * k)


def r_row(n: int) -> list[int]:
    """Row n of the R triangle: k = 0 .. floor((n-1)/2). Row 0 is empty."""
    return [r_coef(n, k) for k in range((n - 1) // 2 + 1)]


def t_row(n: int) -> list[int]:
    """Row n of the T triangle: k = 0 .. floor(n/2)."""
    return [t_coef(n, k) for k in range(n // 2 + 1)]


@lru_cache(maxsize=None)
def _m_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _m_row(n - 1)
    m = n - 1

    def entry(k: int) -> int:
        left = prev[k] if k < len(prev) else 0
        right = prev[k - 1] if 1 <= k <= len(prev) else 0
        return (m + 2 * k + 2) * left + (m - 2 * k + 2) * right

    return tuple(entry(k) for k in range(n // 2 + 1))


@lru_cache(maxsize=None)
def _n_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _n_row(n - 1)
    m = n - 1

    def entry(k: int) -> int:
        left = prev[k] if k < len(prev) else 0
        right = prev[k - 1] if 1 <= k <= len(prev) else 0
        return (m + 2 * k + 1) * left + (m - 2 * k + 3) * right

    return tuple(entry(k) for k in range((n + 1) // 2 + 1))


def m_row(n: int) -> list[int]:
    """Row n of the M triangle by recurrence: k = 0 .. floor(n/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_m_row(n))


def n_row(n: int) -> list[int]:
    """Row n of the N triangle by recurrence: k = 0 .. floor((n+1)/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_n_row(n))


def m_rec(n: int, k: int) -> int:
    """M(n, k) from the recurrence M(n+1,k) = (n+2k+2)M(n,k) + (n-2k+2)M(n,k-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n // 2:
        return 0
    return _m_row(n)[k]


def n_rec(n: int, k: int) -> int:
    """N(n, k) from the recurrence N(n+1,k) = (n+2k+1)N(n,k) + (n-2k+3)N(n,k-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > (n + 1) // 2:
        return 0
    return _n_row(n)[k]


def m_closed(n: int, k: int) -> int:
    """M(n, k) in closed form: n! * C(n+1, 2k+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.factorial(n) * binom(n + 1, 2 * k + 1)


def n_closed(n: int, k: int) -> int:
    """N(n, k) in closed form: n! * C(n+1, 2k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.factorial(n) * binom(n + 1, 2 * k)


def tilde_r_row(n: int) -> list[int]:
    """Row n >= 1 of the Rtilde triangle: coefficients of y^0, y^2, ..., y^(2n-2).

    The source polynomial is the even-index T family for even n and the
    odd-index R family for odd n; rows 1..5 reproduce A056242.
    """
    if n < 1:
        raise ValueError("rows are defined for n >= 1")
    # Function-level import: symbolic imports this module at load time.
    from . import symbolic

    poly = symbolic.t_poly_closed(n) if n % 2 == 0 else symbolic.r_poly_closed(n)
    return _strided_coefficients(poly, first_exp=0, count=n)


def tilde_t_row(n: int) -> list[int]:
    """Row n >= 1 of the Ttilde triangle: coefficients of y^1, y^3, ..., y^(2n-1).

    The source polynomial is the even-index R family for even n and the
    odd-index T family for odd n; rows 1..5 reproduce A210753.
    """
    if n < 1:
        raise ValueError("rows are defined for n >= 1")
    from . import symbolic

    poly = symbolic.r_poly_closed(n) if n % 2 == 0 else symbolic.t_poly_closed(n)
    return _strided_coefficients(poly, first_exp=1, count=n)


def _strided_coefficients(poly, first_exp: int, count: int) -> list[int]:
    from .symbolic import InternalInconsistencyError

    wanted = range(first_exp, first_exp + 2 * count, 2)
    coef = dict(poly.terms())
    stray = sorted(set(coef) - set(wanted))
    if stray:
        raise InternalInconsistencyError(
            f"source polynomial has unexpected exponents {stray}"
        )
    return [coef.get(exp, 0) for exp in wanted]


def verify_rt_recurrences(max_n: int) -> VerifyReport:
    """Check n*R(n+1,k) and n*T(n+1,k) against their two-term recurrences.

    Runs for 1 <= n <= max_n with k covering the full row plus one index on
    each side, so the out-of-range zero convention is exercised too.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    failures = []
    checked = 0
    for n in range(1, max_n + 1):
        for k in range((n + 1) // 2 + 2):
            lhs = n * r_coef(n + 1, k)
            rhs = (n + 2 * k + 1) * r_coef(n, k) + (n - 2 * k + 1) * r_coef(n, k - 1)
            checked += 1
            if lhs != rhs:
                failures.append(failure(family="R", n=n, k=k, lhs=lhs, rhs=rhs))
            lhs = n * t_coef(n + 1, k)
            rhs = (n + 2 * k) * t_coef(n, k) + (n - 2 * k + 2) * t_coef(n, k - 1)
            checked += 1
            if lhs != rhs:
                failures.append(failure(family="T", n=n, k=k, lhs=lhs, rhs=rhs))
    return VerifyReport("rt-recurrences", checked, tuple(failures))


def verify_rec_vs_closed(max_n: int) -> VerifyReport:
    """Check the recurrence values against the factorial closed forms.

    M is compared for k <= floor(n/2) and N for k <= floor((n+1)/2); the
    checked count is the total number of row entries compared.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for k in range(n // 2 + 1):
            checked += 1
            if m_rec(n, k) != m_closed(n, k):
                failures.append(
                    failure(family="M", n=n, k=k, rec=m_rec(n, k), closed=m_closed(n, k))
                )
        for k in range((n + 1) // 2 + 1):
            checked += 1
            if n_rec(n, k) != n_closed(n, k):
                failures.append(
                    failure(family="N", n=n, k=k, rec=n_rec(n, k), closed=n_closed(n, k))
                )
    note = (
        "N is checked on its full defining range k <= floor((n+1)/2), "
        "one column wider than the M range k <= floor(n/2); the closed "
        "form holds on the wider range as well."
    )
    return VerifyReport("corollary", checked, tuple(failures), notes=(note,))

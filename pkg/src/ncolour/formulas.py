"""Closed-form counts for n-colour compositions and self-inverse compositions.

Notation: ``A(m, nu)`` is the number of self-inverse n-colour compositions
of ``nu`` with exactly ``m`` parts.  The three ``count_si_*`` functions
take the half-indices used by the explicit formulas, e.g.
``count_si_odd_weight(m, nu)`` is ``A(2m-1, 2nu-1)``.
"""
from __future__ import annotations

import math


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError(f"fibonacci index must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    if n < 0:
        raise ValueError(f"lucas index must be >= 0, got {n}")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _check_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def count_compositions(nu: int) -> int:
    """Number of n-colour compositions of ``nu``: ``F(2 nu)``."""
    return fibonacci(2 * nu) if nu >= 0 else 0


def count_compositions_m(nu: int, m: int) -> int:
    """Number of n-colour compositions of ``nu`` into ``m`` parts."""
    if nu < 1 or m < 1:
        return 0
    return binomial(nu + m - 1, 2 * m - 1)


def count_si_odd_weight(m: int, nu: int) -> int:
    """``A(2m-1, 2nu-1)``: sum over the odd central part ``2l-1``."""
    _check_positive(m=m, nu=nu)
    if m == 1:
        return 2 * nu - 1
    return sum((2 * l - 1) * binomial(nu + m - l - 2, 2 * m - 3) for l in range(1, nu))


def count_si_even_weight_even_parts(m: int, nu: int) -> int:
    """``A(2m, 2nu)``: two mirrored halves, no central part."""
    _check_positive(m=m, nu=nu)
    return binomial(nu + m - 1, 2 * m - 1)


def count_si_even_weight_odd_parts(m: int, nu: int) -> int:
    """``A(2m-1, 2nu)``: sum over the even central part ``2l``."""
    _check_positive(m=m, nu=nu)
    if m == 1:
        return 2 * nu
    return sum(2 * l * binomial(nu + m - l - 2, 2 * m - 3) for l in range(1, nu))


def count_A(m: int, nu: int) -> int:
    """Self-inverse n-colour compositions of ``nu`` with exactly ``m`` parts."""
    _check_positive(m=m, nu=nu)
    if m % 2 == 0:
        if nu % 2:
            return 0
        return count_si_even_weight_even_parts(m // 2, nu // 2)
    if nu % 2:
        return count_si_odd_weight((m + 1) // 2, (nu + 1) // 2)
    return count_si_even_weight_odd_parts((m + 1) // 2, nu // 2)


def a_closed(n: int) -> int:
    """Self-inverse n-colour compositions of ``2n+1``, as a double sum."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = 2 * n + 1
    for m in range(2, n + 2):
        for l in range(1, n + 1):
            total += (2 * l - 1) * binomial(n + m - l - 1, 2 * m - 3)
    return total


def b_closed(nu: int) -> int:
    """Self-inverse compositions of ``2nu`` with an even number of parts."""
    _check_positive(nu=nu)
    return sum(binomial(nu + m - 1, 2 * m - 1) for m in range(1, nu + 1))


def c_closed(nu: int) -> int:
    """Self-inverse compositions of ``2nu`` with an odd number of parts."""
    _check_positive(nu=nu)
    total = 2 * nu
    for m in range(2, nu + 1):
        for l in range(1, nu):
            total += 2 * l * binomial(nu + m - l - 2, 2 * m - 3)
    return total


def count_self_inverse(nu: int) -> int:
    """All self-inverse n-colour compositions of ``nu``."""
    if nu < 1:
        return 0
    if nu % 2:
        return a_closed((nu - 1) // 2)
    return b_closed(nu // 2) + c_closed(nu // 2)

"""Numerical verifiers for the summation and binomial identities.

Each verifier returns an :class:`IdentityReport` carrying both sides so a
failing index can be shown, not just flagged.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .formulas import a_closed, binomial, fibonacci
from .sequences import SequenceId, seq


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    index: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def alternating_sum(n: int, a: Callable[[int], int] = a_closed) -> int:
    """``sum_{k=0}^{n} (-1)^(n+k) C(2n+1, n-k) a(k)``; always 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return sum((-1) ** (n + k) * binomial(2 * n + 1, n - k) * a(k) for k in range(n + 1))


def _weighted_term_split(nu: int, m: int) -> int:
    # n/(n-m) * C(n-m, m) == C(n-m, m) + C(n-m-1, m-1) with n = 2nu+1
    return binomial(2 * nu + 1 - m, m) + binomial(2 * nu - m, m - 1)


def _weighted_term_division(nu: int, m: int) -> int:
    n = 2 * nu + 1
    q, r = divmod(n * binomial(n - m, m), n - m)
    if r:
        raise ArithmeticError(f"non-integral term at nu={nu}, m={m}")
    return q


def identity_i(nu: int, exact_division: bool = False) -> IdentityReport:
    """Double-sum count of ``2nu+1`` against ``sum_m (2nu+1)/(2nu+1-m) C(2nu+1-m, m)``.

    By default each weighted binomial is evaluated as a sum of two plain
    binomials; ``exact_division=True`` evaluates it by integer division
    instead, as a cross-check of that split.
    """
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    term = _weighted_term_division if exact_division else _weighted_term_split
    rhs = sum(term(nu, m) for m in range(nu + 1))
    return IdentityReport("T6.1i", nu, a_closed(nu), rhs)


def identity_ii(nu: int) -> IdentityReport:
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    lhs = nu + sum(
        l * binomial(nu + m - l - 2, 2 * m - 3) for m in range(2, nu + 1) for l in range(1, nu)
    )
    rhs = sum(binomial(nu + m - 1, 2 * m - 1) for m in range(1, nu + 1))
    return IdentityReport("T6.1ii", nu, lhs, rhs)


def three_times(nu: int) -> IdentityReport:
    """Self-inverse compositions of ``2nu`` versus three times the compositions of ``nu``."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    return IdentityReport("T6.2b", nu, seq(SequenceId.D, nu), 3 * fibonacci(2 * nu))


def _alternating_report(n: int) -> IdentityReport:
    return IdentityReport("T5.1", n, alternating_sum(n), 1)


# label -> (verifier, first valid index)
IDENTITIES: dict[str, tuple[Callable[[int], IdentityReport], int]] = {
    "T5.1": (_alternating_report, 0),
    "T6.1i": (identity_i, 0),
    "T6.1ii": (identity_ii, 1),
    "T6.2b": (three_times, 1),
}


def sweep(identity: str, max_index: int) -> list[IdentityReport]:
    try:
        check, first = IDENTITIES[identity]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity!r}; expected one of {', '.join(IDENTITIES)}"
        ) from None
    return [check(i) for i in range(first, max_index + 1)]

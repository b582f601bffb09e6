"""Exact power-series expansion of integer rational functions.

Coefficients come from the convolution recurrence

    c[n] = (num[n] - sum_{k>=1} den[k] * c[n-k]) / den[0]

which is exact whenever ``den[0]`` is a unit.  Other constant terms are
accepted only as long as every division comes out even.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .formulas import binomial
from .sequences import SequenceId


class SeriesError(ValueError):
    """The series cannot be expanded with integer coefficients."""


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, ascending degree, trailing zeros stripped."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def ascending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """``descending([1, -3, 1])`` is ``q^2 - 3q + 1``."""
        return cls(tuple(coeffs)[::-1])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Comma-separated ascending coefficients, e.g. ``"1,-3,1"``."""
        try:
            return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))
        except ValueError as exc:
            raise ValueError(f"malformed polynomial {text!r}") from exc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class RationalSeries:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise SeriesError("denominator must have a nonzero constant term")

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def expand(series: RationalSeries, count: int) -> list[int]:
    """First ``count`` power-series coefficients of ``series``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    num, den = series.numerator, series.denominator
    lead = den[0]
    out: list[int] = []
    for n in range(count):
        acc = num[n] - sum(den[k] * out[n - k] for k in range(1, min(n, den.degree) + 1))
        q, r = divmod(acc, lead)
        if r:
            raise SeriesError(
                f"coefficient {n} is not an integer: {acc}/{lead} (constant term {lead} is not a unit)"
            )
        out.append(q)
    return out


def truncated_product(coeffs: Sequence[int], poly: IntPolynomial) -> list[int]:
    """``coeffs * poly`` truncated to ``len(coeffs)`` terms."""
    n = len(coeffs)
    return [sum(poly[k] * coeffs[i - k] for k in range(0, min(i, poly.degree) + 1)) for i in range(n)]


_FIB_DEN = IntPolynomial.descending([1, -3, 1])

_NUMERATORS = {
    SequenceId.A: IntPolynomial((1, 1)),
    SequenceId.B: IntPolynomial((0, 1)),
    SequenceId.C: IntPolynomial((0, 2)),
    SequenceId.D: IntPolynomial((0, 3)),
}


def gf_of(id: SequenceId) -> RationalSeries:
    return RationalSeries(_NUMERATORS[id], _FIB_DEN)


def gf_compositions() -> RationalSeries:
    """Generating function of all n-colour compositions: ``q / (1 - 3q + q^2)``."""
    return RationalSeries(IntPolynomial((0, 1)), _FIB_DEN)


def gf_compositions_m(m: int) -> RationalSeries:
    """``q^m / (1-q)^(2m)``, compositions into exactly ``m`` parts."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    den = IntPolynomial(tuple((-1) ** k * binomial(2 * m, k) for k in range(2 * m + 1)))
    return RationalSeries(IntPolynomial.monomial(m), den)

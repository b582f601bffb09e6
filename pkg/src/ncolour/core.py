"""Coloured parts, compositions, and exhaustive enumerators.

A part of size ``k`` comes in ``k`` colours, written ``k_t`` with
``1 <= t <= k``.  The enumerators here are deliberately naive: they are
the brute-force oracle that every counting formula in the package is
checked against.

Enumeration order is lexicographic over the part sequence, where parts
compare by descending size and then ascending colour.  For weight 3 this
gives ``3_1 3_2 3_3 2_1.1_1 2_2.1_1 1_1.2_1 1_1.2_2 1_1.1_1.1_1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class ColouredPart:
    size: int
    colour: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"part size must be >= 1, got {self.size}")
        if not 1 <= self.colour <= self.size:
            raise ValueError(
                f"colour of a part of size {self.size} must lie in 1..{self.size}, "
                f"got {self.colour}"
            )

    def __str__(self) -> str:
        return f"{self.size}_{self.colour}"

    @property
    def sort_key(self) -> tuple[int, int]:
        return (-self.size, self.colour)

    @classmethod
    def parse(cls, text: str) -> "ColouredPart":
        try:
            size, colour = text.split("_")
            return cls(int(size), int(colour))
        except ValueError as exc:
            raise ValueError(f"malformed part {text!r}: expected 'size_colour'") from exc


@dataclass(frozen=True)
class Composition:
    """An ordered, non-empty sequence of coloured parts."""

    parts: tuple[ColouredPart, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        object.__setattr__(self, "parts", tuple(self.parts))

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "Composition":
        """Build from ``(size, colour)`` pairs: ``Composition.of((1, 1), (3, 2), (1, 1))``."""
        return cls(tuple(ColouredPart(s, c) for s, c in pairs))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the text form, e.g. ``"1_1 3_2 1_1"``."""
        return cls(tuple(ColouredPart.parse(tok) for tok in text.split()))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Composition":
        return cls(tuple(ColouredPart(int(s), int(c)) for s, c in pairs))

    def to_pairs(self) -> list[list[int]]:
        return [[p.size, p.colour] for p in self.parts]

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    @property
    def first(self) -> ColouredPart:
        return self.parts[0]

    @property
    def last(self) -> ColouredPart:
        return self.parts[-1]

    @property
    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(p.sort_key for p in self.parts)

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])

    def is_self_inverse(self) -> bool:
        return self.parts == self.parts[::-1]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[ColouredPart]:
        return iter(self.parts)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts)


def weight(c: Composition) -> int:
    return c.weight


def is_self_inverse(c: Composition) -> bool:
    return c.is_self_inverse()


def _iter_parts(total: int, m: Optional[int]) -> Iterator[tuple[ColouredPart, ...]]:
    # m is None for "any number of parts"
    if total == 0:
        if m is None or m == 0:
            yield ()
        return
    if m is not None and (m <= 0 or m > total):
        return
    rest_parts = None if m is None else m - 1
    # leave at least one unit for each remaining part
    max_size = total if m is None else total - (m - 1)
    for size in range(max_size, 0, -1):
        for colour in range(1, size + 1):
            head = ColouredPart(size, colour)
            for tail in _iter_parts(total - size, rest_parts):
                yield (head,) + tail


def iter_compositions(nu: int, m: Optional[int] = None) -> Iterator[Composition]:
    """Stream the n-colour compositions of ``nu`` (with exactly ``m`` parts if given)."""
    if nu < 1:
        return
    for parts in _iter_parts(nu, m):
        yield Composition(parts)


def enumerate_compositions(nu: int) -> list[Composition]:
    return list(iter_compositions(nu))


def enumerate_compositions_m(nu: int, m: int) -> list[Composition]:
    return list(iter_compositions(nu, m))


def _palindromes(nu: int, m: Optional[int]) -> list[Composition]:
    """Self-inverse compositions built as half + optional centre + mirrored half."""
    if nu < 1 or (m is not None and m < 1):
        return []
    found = []
    for half_weight in range(0, nu // 2 + 1):
        centre = nu - 2 * half_weight
        if m is None:
            half_counts: list[Optional[int]] = [None]
        elif centre == 0:
            if m % 2:
                continue
            half_counts = [m // 2]
        else:
            if m % 2 == 0:
                continue
            half_counts = [(m - 1) // 2]
        for hm in half_counts:
            for half in _iter_parts(half_weight, hm):
                mirror = half[::-1]
                if centre == 0:
                    if half:
                        found.append(Composition(half + mirror))
                else:
                    for colour in range(1, centre + 1):
                        found.append(Composition(half + (ColouredPart(centre, colour),) + mirror))
    found.sort(key=lambda c: c.sort_key)
    return found


def enumerate_self_inverse(nu: int) -> list[Composition]:
    return _palindromes(nu, None)


def enumerate_self_inverse_m(nu: int, m: int) -> list[Composition]:
    return _palindromes(nu, m)

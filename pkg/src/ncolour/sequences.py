"""The sequences a, b, c, d and their shared recurrence ``x(n) = 3 x(n-1) - x(n-2)``.

* ``a(n)``: self-inverse n-colour compositions of ``2n+1`` (from ``n = 0``)
* ``b(n)``: those of ``2n`` with an even number of parts (from ``n = 1``)
* ``c(n)``: those of ``2n`` with an odd number of parts (from ``n = 1``)
* ``d(n) = b(n) + c(n)``: all of ``2n`` (from ``n = 1``)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class DomainError(ValueError):
    """Index below the first index of a sequence."""


class SequenceId(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @classmethod
    def parse(cls, text: str) -> "SequenceId":
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown sequence {text!r}; expected one of A, B, C, D") from None

    @property
    def first_index(self) -> int:
        return 0 if self is SequenceId.A else 1

    @property
    def seeds(self) -> tuple[int, int]:
        return _SEEDS[self]


_SEEDS = {
    SequenceId.A: (1, 4),
    SequenceId.B: (1, 3),
    SequenceId.C: (2, 6),
    SequenceId.D: (3, 9),
}


@dataclass(frozen=True)
class SequenceWindow:
    id: SequenceId
    start: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.values
        for i in range(len(v) - 2):
            if v[i + 2] != 3 * v[i + 1] - v[i]:
                raise ValueError(f"window breaks the recurrence at offset {i}")

    def indexed(self) -> list[tuple[int, int]]:
        return [(self.start + i, x) for i, x in enumerate(self.values)]


def _check_index(id: SequenceId, n: int) -> None:
    if n < id.first_index:
        raise DomainError(f"sequence {id.value} starts at index {id.first_index}, got {n}")


def seq_window(id: SequenceId, start: int, length: int) -> SequenceWindow:
    _check_index(id, start)
    if length < 1:
        raise ValueError(f"window length must be >= 1, got {length}")
    x, y = id.seeds
    for _ in range(start - id.first_index):
        x, y = y, 3 * y - x
    values = []
    for _ in range(length):
        values.append(x)
        x, y = y, 3 * y - x
    return SequenceWindow(id, start, tuple(values))


def seq(id: SequenceId, n: int) -> int:
    return seq_window(id, n, 1).values[0]

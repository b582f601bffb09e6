"""Three-class bijective proof of ``a(n) + a(n-2) = 3 a(n-1)``.

The sources are the self-inverse compositions of ``2n+1`` together with
those of ``2n-3``.  They split into three classes, and each class maps
bijectively onto the self-inverse compositions of ``2n-1``:

Class I
    weight ``2n+1``, several parts, extremes ``1_1``.  Delete both extremes.
Class II
    weight ``2n+1``, several parts, extremes ``h_t`` with ``t < h``: replace
    them by ``(h-1)_t``.  Also the single parts ``(2n+1)_t``, ``t <= 2n-1``:
    subtract 2 from the size.
Class III
    weight ``2n+1``, several parts, extremes ``h_h`` with ``h > 1``: replace
    by ``(h-1)_(h-1)``.  Single parts ``(2n+1)_2n -> (2n-1)_(2n-2)`` and
    ``(2n+1)_(2n+1) -> (2n-1)_(2n-1)``.  Every composition of ``2n-3``: with
    several parts replace extremes ``h_t`` by ``(h+1)_t``; a single part
    ``(2n-3)_t`` becomes ``(2n-1)_t``.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .core import ColouredPart, Composition, enumerate_self_inverse


class Origin(enum.Enum):
    FROM_AN = "a(n)"
    FROM_AN_MINUS_2 = "a(n-2)"


class ClassLabel(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class TaggedSource:
    origin: Origin
    composition: Composition

    def __str__(self) -> str:
        return f"[{self.origin.value}] {self.composition}"


def _source_weight(origin: Origin, n: int) -> int:
    return 2 * n + 1 if origin is Origin.FROM_AN else 2 * n - 3


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"the bijection needs n >= 2, got {n}")


def _check_source(s: TaggedSource, n: int) -> None:
    _check_n(n)
    c = s.composition
    want = _source_weight(s.origin, n)
    if c.weight != want:
        raise ValueError(f"{s.origin.value} source must have weight {want}, got {c.weight}: {c}")
    if not c.is_self_inverse():
        raise ValueError(f"source is not self-inverse: {c}")


def _check_target(target: Composition, n: int) -> None:
    _check_n(n)
    if target.weight != 2 * n - 1:
        raise ValueError(f"target must have weight {2 * n - 1}, got {target.weight}: {target}")
    if not target.is_self_inverse():
        raise ValueError(f"target is not self-inverse: {target}")


def _with_extremes(c: Composition, part: ColouredPart) -> Composition:
    # c has at least two parts and is self-inverse
    return Composition((part,) + c.parts[1:-1] + (part,))


def _single(size: int, colour: int) -> Composition:
    return Composition((ColouredPart(size, colour),))


def classify(s: TaggedSource, n: int) -> ClassLabel:
    _check_source(s, n)
    if s.origin is Origin.FROM_AN_MINUS_2:
        return ClassLabel.III
    c = s.composition
    if len(c) == 1:
        return ClassLabel.II if c.first.colour <= 2 * n - 1 else ClassLabel.III
    h, t = c.first.size, c.first.colour
    if h == 1:
        return ClassLabel.I
    return ClassLabel.II if t < h else ClassLabel.III


def forward(s: TaggedSource, n: int) -> Composition:
    label = classify(s, n)
    c = s.composition
    h, t = c.first.size, c.first.colour
    if label is ClassLabel.I:
        return Composition(c.parts[1:-1])
    if label is ClassLabel.II:
        if len(c) == 1:
            return _single(h - 2, t)
        return _with_extremes(c, ColouredPart(h - 1, t))
    if s.origin is Origin.FROM_AN:
        if len(c) == 1:
            return _single(h - 2, t - 2)
        return _with_extremes(c, ColouredPart(h - 1, h - 1))
    if len(c) == 1:
        return _single(h + 2, t)
    return _with_extremes(c, ColouredPart(h + 1, t))


def inverse(target: Composition, label: ClassLabel, n: int) -> TaggedSource:
    _check_target(target, n)
    g, t = target.first.size, target.first.colour
    single = len(target) == 1
    if label is ClassLabel.I:
        one = ColouredPart(1, 1)
        return TaggedSource(Origin.FROM_AN, Composition((one,) + target.parts + (one,)))
    if label is ClassLabel.II:
        if single:
            return TaggedSource(Origin.FROM_AN, _single(g + 2, t))
        return TaggedSource(Origin.FROM_AN, _with_extremes(target, ColouredPart(g + 1, t)))
    if single:
        if t >= 2 * n - 2:
            return TaggedSource(Origin.FROM_AN, _single(g + 2, t + 2))
        return TaggedSource(Origin.FROM_AN_MINUS_2, _single(g - 2, t))
    if t == g:
        return TaggedSource(Origin.FROM_AN, _with_extremes(target, ColouredPart(g + 1, g + 1)))
    return TaggedSource(Origin.FROM_AN_MINUS_2, _with_extremes(target, ColouredPart(g - 1, t)))


def source_domain(n: int) -> list[TaggedSource]:
    _check_n(n)
    return [TaggedSource(Origin.FROM_AN, c) for c in enumerate_self_inverse(2 * n + 1)] + [
        TaggedSource(Origin.FROM_AN_MINUS_2, c) for c in enumerate_self_inverse(2 * n - 3)
    ]


@dataclass
class BijectionSummary:
    n: int
    target_count: int
    class_counts: dict[ClassLabel, int]
    # (source, problem) pairs, rendered as text
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(v == self.target_count for v in self.class_counts.values())


def verify_bijection(n: int) -> BijectionSummary:
    """Run every source through classify/forward/inverse and audit the images."""
    targets = set(enumerate_self_inverse(2 * n - 1))
    counts: Counter[ClassLabel] = Counter()
    images: dict[ClassLabel, Counter[Composition]] = {lab: Counter() for lab in ClassLabel}
    failures: list[tuple[str, str]] = []
    for s in source_domain(n):
        label = classify(s, n)
        counts[label] += 1
        image = forward(s, n)
        images[label][image] += 1
        if image not in targets:
            failures.append((str(s), f"image {image} is not a self-inverse composition of {2 * n - 1}"))
            continue
        back = inverse(image, label, n)
        if back != s:
            failures.append((str(s), f"inverse of {image} in class {label.value} gave {back}"))
    for label in ClassLabel:
        for image, hits in images[label].items():
            if hits > 1:
                failures.append((str(image), f"hit {hits} times in class {label.value}"))
        missing = targets - set(images[label])
        for image in sorted(missing, key=lambda c: c.sort_key):
            failures.append((str(image), f"not reached from class {label.value}"))
    return BijectionSummary(
        n=n,
        target_count=len(targets),
        class_counts={lab: counts[lab] for lab in ClassLabel},
        failures=failures,
    )


def trace(n: int) -> list[tuple[TaggedSource, ClassLabel, Composition]]:
    return [(s, classify(s, n), forward(s, n)) for s in source_domain(n)]

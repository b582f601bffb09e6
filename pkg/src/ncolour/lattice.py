"""Restricted lattice paths from (0, 0) to (2nu+1-k, k).

A path is a string over ``H`` (unit step right) and ``V`` (unit step up).
Valid paths never take two ``V`` steps in a row and do not both start and
end with ``V``.  ``strict=True`` selects the rejected alternative reading
in which neither the first nor the last step may be ``V``; it exists only
as a negative control and does not reproduce the Lucas numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

H, V = "H", "V"


@dataclass(frozen=True)
class PathCountRow:
    nu: int
    k: int
    count: int


def endpoint(path: str) -> tuple[int, int]:
    return (path.count(H), path.count(V))


def no_adjacent_verticals(path: str) -> bool:
    return V + V not in path


def endpoints_ok(path: str, strict: bool = False) -> bool:
    first_v, last_v = path[:1] == V, path[-1:] == V
    if strict:
        return not (first_v or last_v)
    return not (first_v and last_v)


def stays_below_diagonal(path: str) -> bool:
    """Every prefix has at most one more ``V`` than ``H``, i.e. never crosses ``y = x + 1``."""
    x = y = 0
    for step in path:
        if step == H:
            x += 1
        else:
            y += 1
        if y > x + 1:
            return False
    return True


def is_valid_path(path: str, strict: bool = False) -> bool:
    return bool(path) and set(path) <= {H, V} and no_adjacent_verticals(path) and endpoints_ok(path, strict)


def enumerate_paths(nu: int, k: int, strict: bool = False) -> list[str]:
    """All valid paths to ``(2nu+1-k, k)``, lexicographic with ``H < V``."""
    length = 2 * nu + 1
    if nu < 0 or k < 0 or k > length:
        return []
    paths = []
    for ups in combinations(range(length), k):
        steps = [H] * length
        for i in ups:
            steps[i] = V
        path = "".join(steps)
        if is_valid_path(path, strict):
            paths.append(path)
    paths.sort()
    return paths


def _count(length: int, k: int, strict: bool) -> int:
    if length < 1 or k < 0 or k > length:
        return 0
    # state: (verticals so far, first step vertical, last step vertical) -> count
    states = {(0, False, False): 1, (1, True, True): 1}
    if strict:
        states.pop((1, True, True))
    for _ in range(length - 1):
        nxt: dict[tuple[int, bool, bool], int] = {}
        for (ups, first_v, last_v), ways in states.items():
            key = (ups, first_v, False)
            nxt[key] = nxt.get(key, 0) + ways
            if not last_v and ups < k:
                key = (ups + 1, first_v, True)
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    total = 0
    for (ups, first_v, last_v), ways in states.items():
        if ups != k:
            continue
        if strict and last_v:
            continue
        if first_v and last_v:
            continue
        total += ways
    return total


def d_count(nu: int, k: int, strict: bool = False) -> PathCountRow:
    """Number of valid paths to ``(2nu+1-k, k)``, by dynamic programming."""
    count = _count(2 * nu + 1, k, strict) if nu >= 0 else 0
    return PathCountRow(nu, k, count)


def path_triangle(nu: int, strict: bool = False) -> list[PathCountRow]:
    return [d_count(nu, k, strict) for k in range(nu + 1)]


def B_total(nu: int, strict: bool = False) -> int:
    if nu < 0:
        raise ValueError(f"nu must be >= 0, got {nu}")
    return sum(row.count for row in path_triangle(nu, strict))

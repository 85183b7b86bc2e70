"""Multidegree arithmetic, boxes and the reindexing maps p_t and q_k^r.

Multidegrees are plain tuples of ints; every function here returns a new tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, UsageError

Multidegree = tuple[int, ...]


def degree(coords: Iterable[int]) -> Multidegree:
    return tuple(int(c) for c in coords)


def parse_degree(text: str) -> Multidegree:
    """Parse a CLI flag value like ``"1,0,2"``."""
    try:
        return degree(part for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise ParseError(f"cannot read multidegree from {text!r}") from exc


def _same_length(a: Sequence[int], b: Sequence[int]):
    if len(a) != len(b):
        raise UsageError(f"multidegrees {tuple(a)} and {tuple(b)} have different lengths")


def require_natural(a: Sequence[int], name="degree"):
    if any(c < 0 for c in a):
        raise UsageError(f"{name} {tuple(a)} has a negative coordinate")


def zeros(n: int) -> Multidegree:
    return (0,) * n


def ones(n: int) -> Multidegree:
    return (1,) * n


def unit(n: int, j: int) -> Multidegree:
    """The unit vector ε_j, with j a 0-based direction."""
    return tuple(1 if i == j else 0 for i in range(n))


def add(a: Sequence[int], b: Sequence[int]) -> Multidegree:
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Multidegree:
    _same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c: int, a: Sequence[int]) -> Multidegree:
    return tuple(c * x for x in a)


def replace(a: Sequence[int], j: int, value: int) -> Multidegree:
    return tuple(value if i == j else x for i, x in enumerate(a))


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Sequence[int], b: Sequence[int]) -> bool:
    return leq(a, b) and tuple(a) != tuple(b)


def is_natural(a: Sequence[int]) -> bool:
    return all(c >= 0 for c in a)


def p_clamp(t: Sequence[int], a: Sequence[int]) -> Multidegree:
    _same_length(t, a)
    require_natural(a)
    return tuple(min(x, cap) for x, cap in zip(a, t))


def q_map(k: int, r: int, x: int) -> int:
    """The order preserving map of ℕ that collapses [k, k+r] to k."""
    if k < 0 or r < 0:
        raise UsageError(f"q_map needs k, r >= 0, got k={k}, r={r}")
    if x <= k:
        return x
    if x <= k + r:
        return k
    return x - r


def q_vector(k: Sequence[int], r: Sequence[int], x: Sequence[int]) -> Multidegree:
    _same_length(k, r)
    _same_length(k, x)
    return tuple(q_map(kj, rj, xj) for kj, rj, xj in zip(k, r, x))


def support(a: Sequence[int]) -> frozenset[int]:
    """Vertices (1-based) where a is positive."""
    require_natural(a)
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def nonzero_count(a: Sequence[int]) -> int:
    return sum(1 for x in a if x != 0)


@dataclass(frozen=True)
class Box:
    lo: Multidegree
    hi: Multidegree

    def __post_init__(self):
        _same_length(self.lo, self.hi)
        object.__setattr__(self, "lo", degree(self.lo))
        object.__setattr__(self, "hi", degree(self.hi))

    @classmethod
    def upto(cls, t: Sequence[int]) -> "Box":
        return cls(zeros(len(t)), degree(t))

    @property
    def n(self) -> int:
        return len(self.lo)

    def is_empty(self) -> bool:
        return any(a > b for a, b in zip(self.lo, self.hi))

    def __contains__(self, x) -> bool:
        return leq(self.lo, x) and leq(x, self.hi)

    def __iter__(self) -> Iterator[Multidegree]:
        return box_points(self)

    def volume(self) -> int:
        if self.is_empty():
            return 0
        size = 1
        for a, b in zip(self.lo, self.hi):
            size *= b - a + 1
        return size


def box_points(box: Box) -> Iterator[Multidegree]:
    """All points of the box in lexicographic order."""
    if box.is_empty():
        return iter(())
    ranges = [range(a, b + 1) for a, b in zip(box.lo, box.hi)]
    return (tuple(p) for p in itertools.product(*ranges))

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from helpers import degrees
from helpers.degrees import Box, Multidegree
from helpers.errors import NotTDeterminedError, UsageError

from .models import MonomialIdeal, SupportProfile


def minimalize(raw: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = sorted({degrees.degree(g) for g in raw})
    if n is None:
        if not gens:
            raise UsageError("ambient dimension is required for the zero ideal")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise UsageError(f"generator {g} does not live in {n} variables")
        degrees.require_natural(g, name="generator")
    minimal = [g for g in gens if not any(h != g and degrees.leq(h, g) for h in gens)]
    return MonomialIdeal(n=n, gens=tuple(minimal))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n=n, gens=())


def contains(I: MonomialIdeal, a: Sequence[int]) -> bool:
    return I.contains(a)


def is_t_determined(I: MonomialIdeal, t: Sequence[int]) -> bool:
    return all(degrees.leq(g, t) for g in I.gens)


def require_t_determined(I: MonomialIdeal, t: Sequence[int]):
    if len(t) != I.n:
        raise UsageError(f"box {tuple(t)} does not match {I.n} variables")
    degrees.require_natural(t, name="box corner")
    if not is_t_determined(I, t):
        raise NotTDeterminedError(f"ideal {I} is not positively {tuple(t)}-determined")


def support_profile(I: MonomialIdeal, t: Sequence[int]) -> SupportProfile:
    require_t_determined(I, t)
    box = Box.upto(t)
    return SupportProfile(t=box.hi, nonzero=frozenset(a for a in box if not I.contains(a)))


def from_support(nonzero: Iterable[Sequence[int]], t: Sequence[int]) -> MonomialIdeal:
    """The t-determined ideal whose support in [0,t] is the given order ideal."""
    support = {degrees.degree(a) for a in nonzero}
    outside = [a for a in Box.upto(t) if a not in support]
    return minimalize(outside, n=len(t))


def _downsets(points: list[Multidegree], index: int, chosen: set[Multidegree]) -> Iterator[frozenset]:
    if index == len(points):
        yield frozenset(chosen)
        return
    yield from _downsets(points, index + 1, chosen)
    p = points[index]
    n = len(p)
    below = (degrees.sub(p, degrees.unit(n, j)) for j in range(n) if p[j] > 0)
    if all(q in chosen for q in below):
        chosen.add(p)
        yield from _downsets(points, index + 1, chosen)
        chosen.discard(p)


def all_t_determined_ideals(t: Sequence[int]) -> list[MonomialIdeal]:
    """One ideal per order ideal of [0,t], the unit ideal included."""
    points = list(Box.upto(t))
    found = [from_support(J, t) for J in _downsets(points, 0, set())]
    return sorted(found, key=lambda I: (len(I.gens), I.gens))


def random_t_determined_ideal(rng: np.random.Generator, t: Sequence[int], max_gens: int = 3) -> MonomialIdeal:
    count = int(rng.integers(0, max_gens + 1))
    gens = [tuple(int(rng.integers(0, tj + 1)) for tj in t) for _ in range(count)]
    return minimalize(gens, n=len(t))


def is_finite_length(I: MonomialIdeal) -> bool:
    """Every variable has a pure power in I; the unit ideal qualifies."""
    return all(
        any(all(gi == 0 for i, gi in enumerate(g) if i != j) for g in I.gens)
        for j in range(I.n)
    )


def with_pure_powers(I: MonomialIdeal, t: Sequence[int]) -> MonomialIdeal:
    """I + (x_1^{t_1}, ..., x_n^{t_n}), still t-determined and of finite length."""
    require_t_determined(I, t)
    powers = [degrees.scale(tj, degrees.unit(I.n, j)) for j, tj in enumerate(t)]
    return minimalize(list(I.gens) + powers, n=I.n)


def alexander_dual(I: MonomialIdeal, t: Sequence[int]) -> MonomialIdeal:
    """I^[t] as the intersection of the irreducible ideals m^b, one per generator."""
    require_t_determined(I, t)
    irreducibles = [
        tuple(tj + 1 - aj if aj >= 1 else 0 for aj, tj in zip(a, t))
        for a in I.gens
    ]

    def member(c):
        return all(any(bj >= 1 and cj >= bj for bj, cj in zip(b, c)) for b in irreducibles)

    return minimalize([c for c in Box.upto(t) if member(c)], n=I.n)


def peaks(I: MonomialIdeal, t: Sequence[int]) -> list[Multidegree]:
    profile = support_profile(I, t)
    n = len(t)
    found = []
    for y in profile.points():
        above = (degrees.add(y, degrees.unit(n, j)) for j in range(n) if y[j] < t[j])
        if not any(x in profile for x in above):
            found.append(y)
    return found


def indents(I: MonomialIdeal, t: Sequence[int]) -> list[Multidegree]:
    profile = support_profile(I, t)
    n = len(t)
    found = []
    for y in Box.upto(t):
        if y in profile:
            continue
        below = (degrees.sub(y, degrees.unit(n, j)) for j in range(n) if y[j] > 0)
        if all(x in profile for x in below):
            found.append(y)
    return found


def relative_dimension(y: Sequence[int], x: Sequence[int], mode: str = "below") -> int:
    if mode == "below":
        if not degrees.leq(y, x):
            raise UsageError(f"{tuple(y)} is not below {tuple(x)}")
        return degrees.nonzero_count(degrees.sub(x, y))
    if mode == "above":
        if not degrees.leq(x, y):
            raise UsageError(f"{tuple(y)} is not above {tuple(x)}")
        return degrees.nonzero_count(degrees.sub(y, x))
    raise UsageError(f"mode must be 'below' or 'above', got {mode!r}")


def is_interval(points: Iterable[Sequence[int]]) -> bool:
    """True when the points fill a box exactly; the empty set counts."""
    pts = {degrees.degree(p) for p in points}
    if not pts:
        return True
    n = len(next(iter(pts)))
    lo = tuple(min(p[i] for p in pts) for i in range(n))
    hi = tuple(max(p[i] for p in pts) for i in range(n))
    return Box(lo, hi).volume() == len(pts)

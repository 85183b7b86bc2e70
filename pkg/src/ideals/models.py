from __future__ import annotations

from dataclasses import dataclass

from helpers import degrees
from helpers.degrees import Box, Multidegree


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal given by its minimal generators (exponent vectors).
    Build it with ``ideals.utils.minimalize`` so that gens is an antichain.
    """
    n: int
    gens: tuple[Multidegree, ...]

    def __str__(self):
        if not self.gens:
            return "0"
        return "(" + ", ".join(monomial_name(g) for g in self.gens) + ")"

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return degrees.zeros(self.n) in self.gens

    def contains(self, a) -> bool:
        degrees.require_natural(a)
        return any(degrees.leq(g, a) for g in self.gens)

    def as_json(self):
        return [list(g) for g in self.gens]


@dataclass(frozen=True)
class SupportProfile:
    """The order ideal J of degrees a in [0,t] with (S/I)_a nonzero."""
    t: Multidegree
    nonzero: frozenset[Multidegree]

    @property
    def box(self) -> Box:
        return Box.upto(self.t)

    def __contains__(self, a) -> bool:
        return tuple(a) in self.nonzero

    def is_nonzero(self, a) -> bool:
        return tuple(a) in self.nonzero

    def points(self) -> list[Multidegree]:
        return sorted(self.nonzero)

    def is_downward_closed(self) -> bool:
        n = len(self.t)
        for a in self.nonzero:
            for j in range(n):
                if a[j] > 0 and degrees.sub(a, degrees.unit(n, j)) not in self.nonzero:
                    return False
        return True


VARIABLES = "xyzw"


def monomial_name(a) -> str:
    if not any(a):
        return "1"
    names = VARIABLES if len(a) <= len(VARIABLES) else None
    parts = []
    for i, e in enumerate(a):
        if e == 0:
            continue
        var = names[i] if names else f"x{i + 1}"
        parts.append(var if e == 1 else f"{var}^{e}")
    return "".join(parts) if names else "*".join(parts)

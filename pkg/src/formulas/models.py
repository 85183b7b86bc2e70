from __future__ import annotations

from dataclasses import dataclass

from django.db import models

from helpers.degrees import Multidegree


@dataclass(frozen=True)
class GuvTriple:
    """(γ, u, v) with Hⁱ N^k_t(S/I)_r = H̃^{i-γ-1}(Δ^v_u)."""
    gamma: int
    u: Multidegree
    v: Multidegree

    def as_json(self):
        return {"gamma": self.gamma, "u": list(self.u), "v": list(self.v)}


@dataclass(frozen=True)
class IntervalSummary:
    """
    A complex with a single interval module K_t{lo,hi} in cohomological degree
    gamma. ``lo`` and ``hi`` are None for the zero complex.
    """
    gamma: int
    lo: Multidegree | None = None
    hi: Multidegree | None = None

    @property
    def is_zero(self) -> bool:
        return self.lo is None

    @classmethod
    def zero(cls) -> "IntervalSummary":
        return cls(gamma=0)

    def as_json(self):
        if self.is_zero:
            return {"zero": True}
        return {"gamma": self.gamma, "lo": list(self.lo), "hi": list(self.hi)}


@dataclass(frozen=True)
class BettiParams:
    """(γ, a, b) with Bⁱ N^k_t(S/I)_r = H̃^{i-γ-1}(Δ^b_a)."""
    gamma: int
    a: Multidegree
    b: Multidegree

    def as_json(self):
        return {"gamma": self.gamma, "a": list(self.a), "b": list(self.b)}


class WitnessReason(models.TextChoices):
    PEAK = "peak", "Peak"
    INDENT = "indent", "Indent"


@dataclass(frozen=True)
class Witness:
    i: int
    reason: WitnessReason
    y: Multidegree

    def as_json(self):
        return {"i": self.i, "reason": str(self.reason), "y": list(self.y)}


class SingleCase(models.TextChoices):
    SUPPORT_LOW = "a", "Support inside [0, t-k]"
    UPPER_INTERVAL = "b", "Support above t+1-k is a nonempty interval"
    LOWER_COMPLEMENT = "c", "Complement below t+1-k is a nonempty interval"


@dataclass(frozen=True)
class TwoVarReport:
    h0_vanishes: bool
    h1_vanishes: bool
    h2_vanishes: bool
    h3_vanishes: bool
    single_nonvanishing: bool
    case: SingleCase | None = None

    def vanishing(self) -> dict[int, bool]:
        return {0: self.h0_vanishes, 1: self.h1_vanishes, 2: self.h2_vanishes, 3: self.h3_vanishes}

    def as_json(self):
        return {
            "h0_vanishes": self.h0_vanishes,
            "h1_vanishes": self.h1_vanishes,
            "h2_vanishes": self.h2_vanishes,
            "h3_vanishes": self.h3_vanishes,
            "single_nonvanishing": self.single_nonvanishing,
            "case": str(self.case) if self.case else None,
        }
